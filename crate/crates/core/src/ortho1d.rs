//! Monic Jacobi and Hermite polynomials in one variable, their scalar limit
//! transitions, and the Hermite addition formula.
//!
//! Jacobi polynomials are monic with respect to `(1-x)^alpha (1+x)^beta` on
//! `(-1, 1)`; Hermite polynomials are monic with respect to `exp(-x^2)` on the
//! real line. Both are built by their three-term recurrences in exact
//! rational arithmetic.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::convergence::{ConvergenceTable, TableRow};
use crate::error::{Error, Result};
use crate::mpoly::{Exponent, MPoly};
use crate::rational::{from_f64, int, rat, to_f64, Rational};

pub const DEFAULT_SEED: u64 = 42;

/// Dense coefficients of a one-variable polynomial; index `i` holds the
/// coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCoeffs {
    coeffs: Vec<Rational>,
}

impl PolyCoeffs {
    /// Trailing zero coefficients are trimmed so that the last entry is the
    /// leading coefficient. The zero polynomial is stored as `[0]`.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Rational {
        &self.coeffs[self.degree()]
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `(x - shift) * self`.
    fn times_x_minus(&self, shift: &Rational) -> Self {
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * shift;
        }
        Self::new(out)
    }
}

/// Parameters of the Jacobi weight `(1-x)^alpha (1+x)^beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiParams {
    alpha: Rational,
    beta: Rational,
}

impl JacobiParams {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        let minus_one = -Rational::one();
        if alpha <= minus_one || beta <= minus_one {
            return Err(Error::Domain(format!(
                "Jacobi parameters must exceed -1 (alpha = {alpha}, beta = {beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn symmetric(alpha: Rational) -> Result<Self> {
        Self::new(alpha.clone(), alpha)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// Recurrence coefficients `(a_k, b_k)` of
    /// `p_{k+1} = (x - a_k) p_k - b_k p_{k-1}`. `b_0` is returned as zero.
    pub fn recurrence(&self, k: usize) -> (Rational, Rational) {
        let (a, b) = (&self.alpha, &self.beta);
        let kk = int(k as i64);
        let s = a + b;
        let two = int(2);
        let four = int(4);
        if k == 0 {
            // Reduced form: the general a_k is 0/0 when alpha + beta = 0.
            let a0 = (b - a) / (&s + &two);
            return (a0, Rational::zero());
        }
        let two_k_s = &two * &kk + &s;
        let ak = (b * b - a * a) / (&two_k_s * (&two_k_s + &two));
        let bk = if k == 1 {
            // The factor (k + alpha + beta) cancels against (2k + alpha + beta - 1).
            &four * (Rational::one() + a) * (Rational::one() + b)
                / ((&s + &two) * (&s + &two) * (&s + int(3)))
        } else {
            &four * &kk * (&kk + a) * (&kk + b) * (&kk + &s)
                / (&two_k_s
                    * &two_k_s
                    * (&two_k_s + Rational::one())
                    * (&two_k_s - Rational::one()))
        };
        (ak, bk)
    }
}

/// Monic Jacobi polynomial of degree `n`.
pub fn monic_jacobi(n: usize, params: &JacobiParams) -> PolyCoeffs {
    three_term(n, |k| params.recurrence(k))
}

/// Monic Hermite polynomial of degree `n`: `h_{k+1} = x h_k - (k/2) h_{k-1}`.
pub fn monic_hermite(n: usize) -> PolyCoeffs {
    three_term(n, |k| (Rational::zero(), rat(k as i64, 2)))
}

fn three_term(n: usize, coeffs: impl Fn(usize) -> (Rational, Rational)) -> PolyCoeffs {
    let mut prev = PolyCoeffs::new(vec![Rational::zero()]);
    let mut cur = PolyCoeffs::one();
    for k in 0..n {
        let (a, b) = coeffs(k);
        let next = cur.times_x_minus(&a).add(&prev.scale(&-b));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Horner evaluation.
pub fn eval_poly(poly: &PolyCoeffs, x: f64) -> f64 {
    horner(&poly.to_f64(), x)
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// `(x + (c-1)/(c+1))^n`, the limit of `p_n^(alpha,beta)` as both parameters
/// grow with `alpha/beta -> c`.
pub fn ratio_limit_target(n: usize, c: &Rational) -> Result<PolyCoeffs> {
    if c.is_negative() {
        return Err(Error::Domain(format!(
            "ratio c must be nonnegative, got {c}"
        )));
    }
    let shift = (c - Rational::one()) / (c + Rational::one());
    let linear = PolyCoeffs::new(vec![shift, Rational::one()]);
    Ok((0..n).fold(PolyCoeffs::one(), |acc, _| acc.mul(&linear)))
}

/// `count` uniformly spaced points on `[lo, hi]`, endpoints included.
fn uniform_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let step = (hi - lo) / (count - 1) as f64;
    (0..count).map(|i| lo + step * i as f64).collect()
}

pub fn jacobi_grid() -> Vec<f64> {
    uniform_grid(-1.0, 1.0, 41)
}

pub fn hermite_grid() -> Vec<f64> {
    uniform_grid(-3.0, 3.0, 61)
}

fn sup_deviation(lhs: &PolyCoeffs, rhs: &PolyCoeffs, grid: &[f64]) -> f64 {
    let (l, r) = (lhs.to_f64(), rhs.to_f64());
    grid.iter()
        .map(|&x| (horner(&l, x) - horner(&r, x)).abs())
        .fold(0.0, f64::max)
}

fn profile(
    parameters: &[f64],
    mut deviation: impl FnMut(f64) -> Result<f64>,
) -> Result<ConvergenceTable> {
    let rows = parameters
        .iter()
        .map(|&p| {
            if p.is_nan() || p <= 0.0 {
                return Err(Error::Domain(format!(
                    "path parameter {p} must be positive"
                )));
            }
            Ok(TableRow {
                parameter: p,
                deviation: Some(deviation(p)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ConvergenceTable::new(rows)
}

/// Sup deviation on `[-1, 1]` between `p_n^(c s, s)` and
/// [`ratio_limit_target`], for each `s`.
pub fn limit_profile_ratio(n: usize, c: &Rational, s_list: &[f64]) -> Result<ConvergenceTable> {
    let target = ratio_limit_target(n, c)?;
    let grid = jacobi_grid();
    profile(s_list, |s| {
        let s = from_f64(s)?;
        let params = JacobiParams::new(c * &s, s)?;
        Ok(sup_deviation(&monic_jacobi(n, &params), &target, &grid))
    })
}

/// Sup deviation on `[-1, 1]` between `p_n^(alpha, alpha)` and `x^n`.
pub fn limit_profile_monomial(n: usize, alpha_list: &[f64]) -> Result<ConvergenceTable> {
    let target = PolyCoeffs::monomial(n);
    let grid = jacobi_grid();
    profile(alpha_list, |alpha| {
        let params = JacobiParams::symmetric(from_f64(alpha)?)?;
        Ok(sup_deviation(&monic_jacobi(n, &params), &target, &grid))
    })
}

/// `alpha^{n/2} p(alpha^{-1/2} x)`, computed coefficientwise. For a polynomial
/// of definite parity every surviving power of `alpha` is integral, so the
/// result stays exact.
pub fn hermite_rescale(poly: &PolyCoeffs, alpha: &Rational) -> Vec<f64> {
    let n = poly.degree();
    let alpha_f = to_f64(alpha);
    poly.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.is_zero() {
                0.0
            } else if (n - i).is_multiple_of(2) {
                to_f64(&(c * num_traits::pow(alpha.clone(), (n - i) / 2)))
            } else {
                to_f64(c) * alpha_f.powf((n - i) as f64 / 2.0)
            }
        })
        .collect()
}

/// Sup deviation on `[-3, 3]` between `alpha^{n/2} p_n^(alpha,alpha)(alpha^{-1/2} x)`
/// and `h_n(x)`.
pub fn limit_profile_hermite(n: usize, alpha_list: &[f64]) -> Result<ConvergenceTable> {
    let target = monic_hermite(n).to_f64();
    let grid = hermite_grid();
    profile(alpha_list, |alpha| {
        let alpha = from_f64(alpha)?;
        let params = JacobiParams::symmetric(alpha.clone())?;
        let scaled = hermite_rescale(&monic_jacobi(n, &params), &alpha);
        Ok(grid
            .iter()
            .map(|&x| (horner(&scaled, x) - horner(&target, x)).abs())
            .fold(0.0, f64::max))
    })
}

/// All compositions of `total` into `parts` nonnegative parts, in
/// lexicographically decreasing order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, i| acc * int(i))
}

fn multinomial(parts: &[u32]) -> Rational {
    let total: u32 = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total), |acc, &p| acc / factorial(p))
}

/// Maximum absolute residual of the Hermite addition formula over `trials`
/// random points `x` in `[-2, 2]^k` and directions `y` uniform on the unit
/// sphere in `R^k`.
pub fn verify_hermite_addition(l: u32, k: usize, trials: usize, seed: u64) -> Result<f64> {
    if k == 0 || trials == 0 {
        return Err(Error::Domain(
            "need at least one variable and one trial".into(),
        ));
    }
    let hermite: Vec<Vec<f64>> = (0..=l as usize)
        .map(|d| monic_hermite(d).to_f64())
        .collect();
    let terms: Vec<(Vec<u32>, f64)> = compositions(l, k)
        .into_iter()
        .map(|c| {
            let weight = to_f64(&multinomial(&c));
            (c, weight)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let x: Vec<f64> = (0..k).map(|_| rng.random_range(-2.0..=2.0)).collect();
        let y = unit_vector(&mut rng, k);
        let dot: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let lhs = horner(&hermite[l as usize], dot);
        let h_at: Vec<Vec<f64>> = x
            .iter()
            .map(|&xi| hermite.iter().map(|h| horner(h, xi)).collect())
            .collect();
        let rhs: f64 = terms
            .iter()
            .map(|(comp, weight)| {
                comp.iter().enumerate().fold(*weight, |acc, (i, &li)| {
                    acc * y[i].powi(li as i32) * h_at[i][li as usize]
                })
            })
            .sum();
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

fn unit_vector(rng: &mut ChaCha8Rng, k: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..k).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|c| c / norm).collect();
        }
    }
}

/// A polynomial in `x_1..x_k` written in the product basis
/// `h_{l_1}(x_1)...h_{l_k}(x_k)`; each basis index carries a coefficient that
/// is a polynomial in `y_1..y_k`.
pub type HermiteBasisExpansion = BTreeMap<Exponent, MPoly>;

/// Right-hand side of the addition formula, one term per composition of `l`.
pub fn addition_rhs(l: u32, k: usize) -> HermiteBasisExpansion {
    compositions(l, k)
        .into_iter()
        .map(|c| {
            let coeff = MPoly::monomial(c.clone(), multinomial(&c));
            (c, coeff)
        })
        .collect()
}

/// Left-hand side `h_l(x_1 y_1 + ... + x_k y_k)` expanded symbolically and
/// rewritten in the Hermite product basis in `x`.
pub fn addition_lhs(l: u32, k: usize) -> HermiteBasisExpansion {
    let h = monic_hermite(l as usize);
    let to_hermite = monomials_in_hermite_basis(l as usize);
    let mut out = HermiteBasisExpansion::new();
    for (degree, c) in h.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // (sum x_i y_i)^degree = sum over compositions a: multinomial(a) x^a y^a
        for a in compositions(degree as u32, k) {
            let weight = c * multinomial(&a);
            let mut basis_terms: Vec<(Exponent, Rational)> = vec![(Vec::new(), Rational::one())];
            for &ai in &a {
                let row = &to_hermite[ai as usize];
                basis_terms = basis_terms
                    .into_iter()
                    .flat_map(|(idx, coef)| {
                        row.iter()
                            .enumerate()
                            .filter(|(_, t)| !t.is_zero())
                            .map(move |(r, t)| {
                                let mut idx = idx.clone();
                                idx.push(r as u32);
                                (idx, &coef * t)
                            })
                    })
                    .collect();
            }
            for (idx, coef) in basis_terms {
                let term = MPoly::monomial(a.clone(), &weight * coef);
                let slot = out.entry(idx).or_insert_with(|| MPoly::zero(k));
                *slot = &*slot + &term;
            }
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Row `m` holds the coordinates of `x^m` in the basis `h_0, ..., h_m`.
fn monomials_in_hermite_basis(max_degree: usize) -> Vec<Vec<Rational>> {
    let hermite: Vec<PolyCoeffs> = (0..=max_degree).map(monic_hermite).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(max_degree + 1);
    for m in 0..=max_degree {
        // x^m = h_m - sum_{r<m} [x^r]h_m * x^r
        let mut row = vec![Rational::zero(); m + 1];
        row[m] = Rational::one();
        for (r, lower) in rows.iter().enumerate() {
            let c = hermite[m].coeff(r);
            if c.is_zero() {
                continue;
            }
            for (j, t) in lower.iter().enumerate() {
                row[j] -= &c * t;
            }
        }
        rows.push(row);
    }
    rows
}

/// Normal form of a polynomial in `y_1..y_k` modulo `y_1^2 + ... + y_k^2 = 1`,
/// eliminating even powers of `y_k` above one.
pub fn reduce_on_sphere(poly: &MPoly) -> MPoly {
    let k = poly.nvars();
    if k == 0 {
        return poly.clone();
    }
    let last = k - 1;
    let mut pending = poly.clone();
    let mut done = MPoly::zero(k);
    while !pending.is_zero() {
        let mut next = MPoly::zero(k);
        for (e, c) in pending.terms() {
            if e[last] < 2 {
                done.add_term(e.clone(), c.clone());
                continue;
            }
            // y_k^2 -> 1 - sum_{i<k} y_i^2
            let mut base = e.clone();
            base[last] -= 2;
            next.add_term(base.clone(), c.clone());
            for i in 0..last {
                let mut shifted = base.clone();
                shifted[i] += 2;
                next.add_term(shifted, -c.clone());
            }
        }
        pending = next;
    }
    done
}

/// Coefficient of `h_l(x_1) h_0(x_2)...h_0(x_k)` on the right-hand side of the
/// addition formula, as a polynomial in `y_1`.
pub fn spherical_coefficient(l: u32, k: usize) -> Result<PolyCoeffs> {
    if k == 0 {
        return Err(Error::Domain("need at least one variable".into()));
    }
    let mut index = vec![0; k];
    index[0] = l;
    let rhs = addition_rhs(l, k);
    let coeff = rhs.get(&index).cloned().unwrap_or_else(|| MPoly::zero(k));
    let mut dense = vec![Rational::zero(); coeff.degree_in(0) as usize + 1];
    for (e, c) in coeff.terms() {
        if e[1..].iter().any(|&p| p != 0) {
            return Err(Error::Domain(format!(
                "coefficient depends on variables other than y_1: exponent {e:?}"
            )));
        }
        dense[e[0] as usize] += c;
    }
    Ok(PolyCoeffs::new(dense))
}
