//! Heckman–Opdam Jacobi polynomials for the root systems `BC_n` and `A_{n-1}`,
//! Jack polynomials obtained from them by an exponential lift, classical
//! monic Jacobi and Hermite polynomials, and harnesses that measure the
//! limit transitions between these families.
//!
//! All polynomial coefficients are exact rationals ([`Rational`]); floating
//! point only enters when polynomials are evaluated.

pub mod cli;
pub mod convergence;
pub mod error;
pub mod hojacobi;
pub mod jack;
pub mod limits_bc;
pub mod mpoly;
pub mod ortho1d;
pub mod rational;
pub mod rootsystems;

pub use convergence::{ConvergenceTable, TableRow};
pub use error::{Error, Result};
pub use hojacobi::{ho_eval, ho_expand, operator_residual, OrbitExpansion};
pub use jack::{jack_crosscheck, jack_eval, jack_from_ho, jack_oracle, MonomialExpansion};
pub use limits_bc::{theorem1_deviation, theorem1_map, theorem1_sweep, LimitPath, LimitRatio};
pub use ortho1d::{monic_hermite, monic_jacobi, JacobiParams, PolyCoeffs};
pub use rational::Rational;
pub use rootsystems::{Multiplicity, RootKind, RootSystem, Weight};
