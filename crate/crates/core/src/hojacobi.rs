//! Jacobi polynomials attached to a root system, expanded in orbit sums.
//!
//! `p_lambda = sum_{mu <= lambda} c_mu m_mu` with `c_lambda = 1` is the
//! triangular eigenfunction of
//!
//! ```text
//! L = Laplacian + sum_{alpha > 0} kappa(alpha) coth(<alpha, t>/2) d_alpha
//! ```
//!
//! with eigenvalue `<lambda, lambda + 2 rho>`. Expanding `coth(x/2)` as
//! `1 + 2 sum_{j>=1} e^{-jx}` and comparing the coefficient of `e^mu` gives
//!
//! ```text
//! (E(lambda) - E(mu)) c_mu = 2 sum_{alpha > 0} kappa(alpha) sum_{j>=1} <mu + j alpha, alpha> c_{mu + j alpha}
//! ```
//!
//! where `E(nu) = <nu, nu + 2 rho>` and `c` is constant on Weyl orbits. Every
//! `mu + j alpha` sits strictly above `mu`, so walking the saturation set from
//! the top down determines all coefficients. [`operator_residual`] applies `L`
//! directly and is the independent check on this recursion.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, to_f64, Rational};
use crate::rootsystems::{
    dominant_rep, eigenvalue_unchecked, orbit_unchecked, positive_roots, rho, saturation_unchecked,
    Multiplicity, RootKind, RootSystem, Weight,
};

/// Margin below which a point is treated as lying on a chamber wall.
pub const CHAMBER_MARGIN: f64 = 1e-3;

/// Largest exponent evaluated before reporting overflow.
pub const MAX_EXPONENT: f64 = 700.0;

#[derive(Debug, Clone)]
struct OrbitTerm {
    coeff: f64,
    orbit: Vec<Weight>,
}

/// `p_lambda` in the orbit-sum basis. Only nonzero coefficients are kept.
#[derive(Debug, Clone)]
pub struct OrbitExpansion {
    lambda: Weight,
    system: RootSystem,
    kappa: Multiplicity,
    eigenvalue: Rational,
    coeffs: BTreeMap<Weight, Rational>,
    terms: Vec<OrbitTerm>,
}

impl OrbitExpansion {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn kappa(&self) -> &Multiplicity {
        &self.kappa
    }

    /// `<lambda, lambda + 2 rho>`.
    pub fn eigenvalue(&self) -> &Rational {
        &self.eigenvalue
    }

    pub fn coeffs(&self) -> &BTreeMap<Weight, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &Weight) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exponents `nu` and coefficients of the expansion as a sum of
    /// exponentials `e^{<nu, t>}`.
    pub fn exponentials(&self) -> impl Iterator<Item = (&Weight, f64)> {
        self.terms
            .iter()
            .flat_map(|term| term.orbit.iter().map(move |nu| (nu, term.coeff)))
    }
}

/// Expands `p_lambda` for the root system `rs` with multiplicities `kappa`.
pub fn ho_expand(rs: &RootSystem, kappa: &Multiplicity, lambda: &Weight) -> Result<OrbitExpansion> {
    rs.check_multiplicity(kappa)?;
    rs.check_dominant(lambda)?;
    let rho = rho(rs, kappa)?;
    let saturation = saturation_unchecked(lambda.entries(), rs.kind());
    let position: HashMap<&Weight, usize> =
        saturation.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let top = eigenvalue_unchecked(lambda.entries(), &rho, rs);
    let bound = rs.norm_sq(lambda.entries());

    let roots: Vec<(Vec<i64>, Rational)> = positive_roots(rs)
        .into_iter()
        .map(|r| {
            let k = kappa.value(r.class);
            (r.vector, k)
        })
        .filter(|(_, k)| !k.is_zero())
        .collect();

    let mut values: Vec<Rational> = vec![Rational::zero(); saturation.len()];
    values[0] = Rational::one();
    for (index, mu) in saturation.iter().enumerate().skip(1) {
        let mut numerator = Rational::zero();
        for (alpha, k) in &roots {
            let mut shifted = mu.entries().to_vec();
            loop {
                for (s, a) in shifted.iter_mut().zip(alpha) {
                    *s += a;
                }
                if rs.norm_sq(&shifted) > bound {
                    break;
                }
                let Some(&above) = position.get(&dominant_rep(&shifted, rs)) else {
                    continue;
                };
                if values[above].is_zero() {
                    continue;
                }
                numerator += k * rs.inner(&shifted, alpha) * &values[above];
            }
        }
        let gap = &top - eigenvalue_unchecked(mu.entries(), &rho, rs);
        if gap.is_zero() {
            return Err(Error::Resonance { mu: mu.clone() });
        }
        values[index] = int(2) * numerator / gap;
    }

    let coeffs: BTreeMap<Weight, Rational> = saturation
        .into_iter()
        .zip(values)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let terms = coeffs
        .iter()
        .map(|(mu, c)| OrbitTerm {
            coeff: to_f64(c),
            orbit: orbit_unchecked(mu.entries(), rs.kind()),
        })
        .collect();
    Ok(OrbitExpansion {
        lambda: lambda.clone(),
        system: *rs,
        kappa: kappa.clone(),
        eigenvalue: top,
        coeffs,
        terms,
    })
}

/// `<nu, t>` for BC, `<nu, pi(t)>` for A.
fn pairing(rs: &RootSystem, nu: &[i64], t: &[f64]) -> f64 {
    let dot: f64 = nu.iter().zip(t).map(|(&a, &b)| a as f64 * b).sum();
    match rs.kind() {
        RootKind::BC => dot,
        RootKind::A => {
            let sum_nu: i64 = nu.iter().sum();
            let sum_t: f64 = t.iter().sum();
            dot - sum_nu as f64 * sum_t / rs.rank() as f64
        }
    }
}

fn check_point(rs: &RootSystem, t: &[f64]) -> Result<()> {
    if t.len() != rs.rank() {
        return Err(Error::Domain(format!(
            "point has {} coordinates, expected {}",
            t.len(),
            rs.rank()
        )));
    }
    if let Some(bad) = t.iter().position(|x| !x.is_finite()) {
        return Err(Error::Domain(format!("coordinate {bad} is not finite")));
    }
    Ok(())
}

fn exponential(rs: &RootSystem, nu: &[i64], t: &[f64]) -> Result<f64> {
    let exponent = pairing(rs, nu, t);
    if exponent.abs() > MAX_EXPONENT {
        return Err(Error::Overflow { exponent });
    }
    Ok(exponent.exp())
}

/// `sum_mu c_mu sum_{nu in W mu} e^{<nu, t>}`.
pub fn ho_eval(exp: &OrbitExpansion, t: &[f64]) -> Result<f64> {
    let rs = &exp.system;
    check_point(rs, t)?;
    let mut total = 0.0;
    for (nu, c) in exp.exponentials() {
        total += c * exponential(rs, nu.entries(), t)?;
    }
    Ok(total)
}

/// Applies the differential operator to the expansion in closed form and
/// returns `max |L p - E p| / (1 + |p|)` over the points, which must lie
/// strictly inside the positive chamber.
pub fn operator_residual(exp: &OrbitExpansion, t_points: &[Vec<f64>]) -> Result<f64> {
    let rs = &exp.system;
    let roots: Vec<(Vec<i64>, f64)> = positive_roots(rs)
        .into_iter()
        .map(|r| {
            let k = to_f64(&exp.kappa.value(r.class));
            (r.vector, k)
        })
        .collect();
    let eigenvalue = to_f64(&exp.eigenvalue);
    let mut worst: f64 = 0.0;
    for (index, t) in t_points.iter().enumerate() {
        check_point(rs, t)?;
        let mut coth = Vec::with_capacity(roots.len());
        for (alpha, _) in &roots {
            // Type A roots sum to zero, so <alpha, pi(t)> = <alpha, t>.
            let value: f64 = alpha.iter().zip(t).map(|(&a, &b)| a as f64 * b).sum();
            if value <= CHAMBER_MARGIN {
                return Err(Error::Chamber {
                    index,
                    root: alpha.clone(),
                    pairing: value,
                });
            }
            coth.push(1.0 / (value / 2.0).tanh());
        }
        let mut p = 0.0;
        let mut lp = 0.0;
        for (nu, c) in exp.exponentials() {
            let nu = nu.entries();
            let e = exponential(rs, nu, t)?;
            let laplacian = to_f64(&rs.norm_sq(nu));
            let drift: f64 = roots
                .iter()
                .zip(&coth)
                .map(|((alpha, k), ct)| {
                    let slope: i64 = nu.iter().zip(alpha).map(|(a, b)| a * b).sum();
                    k * ct * slope as f64
                })
                .sum();
            p += c * e;
            lp += c * (laplacian + drift) * e;
        }
        worst = worst.max((lp - eigenvalue * p).abs() / (1.0 + p.abs()));
    }
    Ok(worst)
}
