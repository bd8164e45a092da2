//! Degeneration of `BC_n` Jacobi polynomials to Jack polynomials.
//!
//! Along multiplicity paths with `k2 -> infinity` and `k1/k2 -> -a`
//! (`-infinity <= a <= 1`), `p_B(t)` approaches a constant multiple of
//! `j_lambda^(k3)(tau)`, where
//!
//! ```text
//! e^{tau_i} = (a - 1)/(a - 2) + sinh^2(t_i / 2).
//! ```
//!
//! The constant is not fixed, so deviations are measured between ratios
//! `f(t)/f(t_ref)` of the two sides.

use std::fmt;
use std::str::FromStr;

use crate::convergence::{ConvergenceTable, TableRow};
use crate::error::{Error, Result};
use crate::hojacobi::{ho_eval, ho_expand, OrbitExpansion};
use crate::jack::{jack_eval, jack_from_ho, MonomialExpansion};
use crate::rational::{from_f64, Rational};
use crate::rootsystems::{Multiplicity, RootSystem, Weight};

/// The limiting value `a` of `-k1/k2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LimitRatio {
    Finite(f64),
    NegInfinity,
}

impl LimitRatio {
    pub fn finite(a: f64) -> Result<Self> {
        if !a.is_finite() || a > 1.0 {
            return Err(Error::Domain(format!(
                "a must be finite and at most 1, got {a}"
            )));
        }
        Ok(Self::Finite(a))
    }

    /// `(a - 1)/(a - 2)`, which tends to 1 as `a -> -infinity`.
    pub fn offset(&self) -> f64 {
        match *self {
            Self::Finite(a) => (a - 1.0) / (a - 2.0),
            Self::NegInfinity => 1.0,
        }
    }
}

impl fmt::Display for LimitRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(a) => write!(f, "{a}"),
            Self::NegInfinity => write!(f, "-inf"),
        }
    }
}

impl FromStr for LimitRatio {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text.trim() {
            "-inf" | "-infinity" | "-oo" => Ok(Self::NegInfinity),
            other => {
                let a: f64 = other
                    .parse()
                    .map_err(|_| Error::Domain(format!("cannot parse '{other}' as a")))?;
                Self::finite(a)
            }
        }
    }
}

/// A point on a multiplicity path: `(k1, k2) = (-a s, s)` for finite `a`,
/// `(s^2, s)` for `a = -infinity`.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitPath {
    pub ratio: LimitRatio,
    pub s: f64,
    pub k3: Rational,
}

impl LimitPath {
    pub fn new(ratio: LimitRatio, s: f64, k3: Rational) -> Result<Self> {
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::Domain(format!(
                "path parameter must be positive, got {s}"
            )));
        }
        Ok(Self { ratio, s, k3 })
    }

    pub fn multiplicity(&self) -> Result<Multiplicity> {
        let s = from_f64(self.s)?;
        let k1 = match self.ratio {
            LimitRatio::Finite(a) => -from_f64(a)? * &s,
            LimitRatio::NegInfinity => &s * &s,
        };
        Ok(Multiplicity::bc(k1, s, self.k3.clone()))
    }
}

/// `tau_i = log((a - 1)/(a - 2) + sinh^2(t_i / 2))`.
pub fn theorem1_map(t: &[f64], ratio: LimitRatio) -> Result<Vec<f64>> {
    let offset = ratio.offset();
    t.iter()
        .enumerate()
        .map(|(i, &ti)| {
            let arg = offset + (ti / 2.0).sinh().powi(2);
            if arg.is_nan() || arg <= 0.0 {
                return Err(Error::Domain(format!(
                    "coordinate {i} (t = {ti}) maps outside the domain of log for a = {ratio}"
                )));
            }
            Ok(arg.ln())
        })
        .collect()
}

/// Three chamber points `g * (n, n-1, ..., 1)/n` for `g` in `{0.8, 1.5, 2.2}`.
pub fn default_grid(n: usize) -> Vec<Vec<f64>> {
    [0.8, 1.5, 2.2]
        .iter()
        .map(|g| (0..n).map(|i| g * (n - i) as f64 / n as f64).collect())
        .collect()
}

struct Sides {
    bc: OrbitExpansion,
    jack: MonomialExpansion,
}

fn sides(lambda: &Weight, n: usize, path: &LimitPath) -> Result<Sides> {
    let rs = RootSystem::bc(n)?;
    let lambda = lambda.padded(n)?;
    let bc = ho_expand(&rs, &path.multiplicity()?, &lambda)?;
    let jack = jack_from_ho(&lambda, n, &path.k3)?;
    Ok(Sides { bc, jack })
}

fn jack_at(jack: &MonomialExpansion, t: &[f64], ratio: LimitRatio) -> Result<f64> {
    let x: Vec<f64> = theorem1_map(t, ratio)?
        .iter()
        .map(|tau| tau.exp())
        .collect();
    jack_eval(jack, &x)
}

fn nonzero(value: f64, what: &str) -> Result<f64> {
    if value == 0.0 || !value.is_finite() {
        return Err(Error::Division(format!(
            "{what} is {value} at the reference point"
        )));
    }
    Ok(value)
}

/// `max_t |p_B(t)/p_B(t_ref) - j(tau)/j(tau_ref)|` with `t_ref = grid[0]`.
pub fn theorem1_deviation(
    lambda: &Weight,
    n: usize,
    k3: &Rational,
    ratio: LimitRatio,
    s: f64,
    grid: &[Vec<f64>],
) -> Result<f64> {
    let Some(reference) = grid.first() else {
        return Err(Error::Domain("grid must contain a reference point".into()));
    };
    let path = LimitPath::new(ratio, s, k3.clone())?;
    let Sides { bc, jack } = sides(lambda, n, &path)?;
    let bc_ref = nonzero(ho_eval(&bc, reference)?, "p_B")?;
    let jack_ref = nonzero(jack_at(&jack, reference, ratio)?, "j")?;
    let mut worst: f64 = 0.0;
    for t in grid {
        let lhs = ho_eval(&bc, t)? / bc_ref;
        let rhs = jack_at(&jack, t, ratio)? / jack_ref;
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// Empirical constant `p_B(t)/j(tau)` at one point.
pub fn theorem1_constant(
    lambda: &Weight,
    n: usize,
    k3: &Rational,
    ratio: LimitRatio,
    s: f64,
    t: &[f64],
) -> Result<f64> {
    let path = LimitPath::new(ratio, s, k3.clone())?;
    let Sides { bc, jack } = sides(lambda, n, &path)?;
    Ok(ho_eval(&bc, t)? / nonzero(jack_at(&jack, t, ratio)?, "j")?)
}

/// One row per `s`; resonant values of `s` are recorded as skipped.
pub fn theorem1_sweep(
    lambda: &Weight,
    n: usize,
    k3: &Rational,
    ratio: LimitRatio,
    s_list: &[f64],
    grid: &[Vec<f64>],
) -> Result<ConvergenceTable> {
    let mut rows = Vec::with_capacity(s_list.len());
    for &s in s_list {
        let deviation = match theorem1_deviation(lambda, n, k3, ratio, s, grid) {
            Ok(d) => Some(d),
            Err(Error::Resonance { .. }) => None,
            Err(e) => return Err(e),
        };
        rows.push(TableRow {
            parameter: s,
            deviation,
        });
    }
    ConvergenceTable::new(rows)
}
