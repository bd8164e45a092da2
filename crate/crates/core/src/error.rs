use thiserror::Error;

use crate::rootsystems::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("weight {weight} is not dominant for {system}")]
    InvalidWeight { weight: Weight, system: String },

    #[error("weight has {parts} nonzero parts but only {nvars} variables are available")]
    Arity { parts: usize, nvars: usize },

    #[error("resonance at mu = {mu}: eigenvalue gap vanishes")]
    Resonance { mu: Weight },

    #[error("eigenvalue collision between {lambda} and {mu}")]
    EigenvalueCollision { lambda: Weight, mu: Weight },

    #[error(
        "point {index} is outside the positive chamber: <alpha, t> = {pairing} for root {root:?}"
    )]
    Chamber {
        index: usize,
        root: Vec<i64>,
        pairing: f64,
    },

    #[error("exponent {exponent} would overflow (|<nu, t>| > 700)")]
    Overflow { exponent: f64 },

    #[error("division by zero: {0}")]
    Division(String),
}
