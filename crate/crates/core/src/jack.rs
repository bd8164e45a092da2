//! Jack polynomials in the monomial basis.
//!
//! The production route ([`jack_from_ho`]) lifts the `A_{n-1}` Jacobi
//! polynomial: with `x_i = e^{t_i}`,
//!
//! ```text
//! j_lambda(t) = e^{(t_1 + ... + t_n) |lambda| / n} p_{pi(lambda)}(pi(t))
//! ```
//!
//! and since every weight in the expansion has total `|lambda|`, each
//! `e^{<pi(nu), pi(t)>}` times the prefactor is exactly `x^nu`.
//!
//! The oracle route ([`jack_oracle`]) never touches root systems: it
//! diagonalises the classical Jack operator
//! `D = (alpha/2) sum_i x_i^2 d_i^2 + sum_{i != j} x_i^2/(x_i - x_j) d_i`
//! on the monomial symmetric functions of degree `|lambda|`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hojacobi::ho_expand;
use crate::mpoly::MPoly;
use crate::rational::{int, to_f64, Rational};
use crate::rootsystems::{
    distinct_permutations, dominance_leq_unchecked, Multiplicity, RootKind, RootSystem, Weight,
};

/// A symmetric polynomial `sum_mu c_mu m_mu(x_1, ..., x_n)`. Partitions are
/// keyed without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialExpansion {
    lambda: Weight,
    nvars: usize,
    coeffs: BTreeMap<Weight, Rational>,
}

impl MonomialExpansion {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &BTreeMap<Weight, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &Weight) -> Rational {
        self.coeffs
            .get(&mu.stripped())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

fn check_partition(lambda: &Weight, nvars: usize) -> Result<Weight> {
    if nvars == 0 {
        return Err(Error::Domain("need at least one variable".into()));
    }
    let e = lambda.entries();
    if e.iter().any(|&x| x < 0) || e.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::InvalidWeight {
            weight: lambda.clone(),
            system: "partitions".into(),
        });
    }
    lambda.padded(nvars)
}

/// Jack polynomial from the `A_{n-1}` Jacobi polynomial with multiplicity `k`.
pub fn jack_from_ho(lambda: &Weight, nvars: usize, k: &Rational) -> Result<MonomialExpansion> {
    let padded = check_partition(lambda, nvars)?;
    let stripped = padded.stripped();
    if nvars == 1 {
        // A_0 has no roots: p is the single exponential.
        return Ok(MonomialExpansion {
            lambda: stripped.clone(),
            nvars,
            coeffs: BTreeMap::from([(stripped, Rational::one())]),
        });
    }
    let rs = RootSystem::a(nvars)?;
    let expansion = ho_expand(&rs, &Multiplicity::a(k.clone()), &padded)?;
    let total = padded.total();
    let coeffs = expansion
        .coeffs()
        .iter()
        .map(|(mu, c)| {
            debug_assert_eq!(mu.total(), total, "A-type expansions preserve the total");
            (mu.stripped(), c.clone())
        })
        .collect();
    Ok(MonomialExpansion {
        lambda: stripped,
        nvars,
        coeffs,
    })
}

/// Partitions of `total` with at most `max_parts` parts, padded to
/// `max_parts`, lexicographically decreasing.
pub fn partitions(total: i64, max_parts: usize) -> Vec<Weight> {
    fn go(remaining: i64, cap: i64, slots: usize, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(Weight(prefix.clone()));
            }
            return;
        }
        for part in (0..=cap.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, max_parts, &mut Vec::new(), &mut out);
    out
}

fn monomial_symmetric(mu: &Weight) -> MPoly {
    let mut poly = MPoly::zero(mu.len());
    for perm in distinct_permutations(mu.entries()) {
        poly.add_term(perm.iter().map(|&x| x as u32).collect(), Rational::one());
    }
    poly
}

/// `D f` for a symmetric polynomial `f` in `n` variables.
fn jack_operator(f: &MPoly, alpha: &Rational) -> MPoly {
    let n = f.nvars();
    let mut out = MPoly::zero(n);
    let half_alpha = alpha / int(2);
    for (e, c) in f.terms() {
        let diag: u32 = e.iter().map(|&p| p * p.saturating_sub(1)).sum();
        out.add_term(e.clone(), c * &half_alpha * int(i64::from(diag)));
    }
    for i in 0..n {
        for j in i + 1..n {
            // (x_i^2 d_i f - x_j^2 d_j f) / (x_i - x_j); the numerator is
            // antisymmetric in (i, j) because f is symmetric.
            let mut numerator = MPoly::zero(n);
            for (e, c) in f.terms() {
                if e[i] > 0 {
                    let mut up = e.clone();
                    up[i] += 1;
                    numerator.add_term(up, c * int(i64::from(e[i])));
                }
                if e[j] > 0 {
                    let mut up = e.clone();
                    up[j] += 1;
                    numerator.add_term(up, -(c * int(i64::from(e[j]))));
                }
            }
            for (e, c) in numerator.terms() {
                if e[i] <= e[j] {
                    debug_assert!(e[i] < e[j] || c.is_zero());
                    continue;
                }
                // (x_i^p x_j^q - x_i^q x_j^p) / (x_i - x_j)
                //   = sum_{r=q}^{p-1} x_i^r x_j^{p+q-1-r}
                let (p, q) = (e[i], e[j]);
                for r in q..p {
                    let mut quotient = e.clone();
                    quotient[i] = r;
                    quotient[j] = p + q - 1 - r;
                    out.add_term(quotient, c.clone());
                }
            }
        }
    }
    out
}

/// Matrix of `D` on `basis`: entry `[row][col]` is the coefficient of
/// `m_{basis[row]}` in `D m_{basis[col]}`.
fn operator_matrix(basis: &[Weight], alpha: &Rational) -> Vec<Vec<Rational>> {
    let mut matrix = vec![vec![Rational::zero(); basis.len()]; basis.len()];
    for (col, mu) in basis.iter().enumerate() {
        let image = jack_operator(&monomial_symmetric(mu), alpha);
        for (row, nu) in basis.iter().enumerate() {
            let exponent: Vec<u32> = nu.entries().iter().map(|&x| x as u32).collect();
            matrix[row][col] = image.coeff(&exponent);
        }
    }
    matrix
}

/// Jack polynomial with parameter `alpha` from the eigenvectors of `D`.
pub fn jack_oracle(lambda: &Weight, nvars: usize, alpha: &Rational) -> Result<MonomialExpansion> {
    if !alpha.is_positive() {
        return Err(Error::Domain(format!(
            "alpha must be positive, got {alpha}"
        )));
    }
    let padded = check_partition(lambda, nvars)?;
    let basis = partitions(padded.total(), nvars);
    let top = basis
        .iter()
        .position(|w| *w == padded)
        .expect("lambda is a partition of its own total");
    let matrix = operator_matrix(&basis, alpha);
    let eigenvalue = matrix[top][top].clone();

    let below: Vec<bool> = basis
        .iter()
        .map(|nu| dominance_leq_unchecked(nu.entries(), padded.entries(), RootKind::A))
        .collect();
    let mut vector = vec![Rational::zero(); basis.len()];
    vector[top] = Rational::one();
    // Lexicographic order is a linear extension of dominance, so every
    // partition above `nu` has already been solved.
    for row in top + 1..basis.len() {
        if !below[row] {
            continue;
        }
        let gap = &eigenvalue - &matrix[row][row];
        if gap.is_zero() {
            return Err(Error::EigenvalueCollision {
                lambda: padded.stripped(),
                mu: basis[row].stripped(),
            });
        }
        let rhs = (top..row).fold(Rational::zero(), |acc, col| {
            acc + &matrix[row][col] * &vector[col]
        });
        vector[row] = rhs / gap;
    }

    for (row, entries) in matrix.iter().enumerate() {
        let image = entries
            .iter()
            .zip(&vector)
            .fold(Rational::zero(), |acc, (m, v)| acc + m * v);
        if image != &eigenvalue * &vector[row] {
            return Err(Error::Domain(format!(
                "operator is not triangular at m_{}",
                basis[row].stripped()
            )));
        }
    }

    Ok(MonomialExpansion {
        lambda: padded.stripped(),
        nvars,
        coeffs: basis
            .into_iter()
            .zip(vector)
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w.stripped(), c))
            .collect(),
    })
}

/// Conventional Jack parameter matching the multiplicity `k`.
///
/// Derived rather than assumed: for `lambda = (2)` in two variables the lift
/// gives one free coefficient (of `m_{1,1}`), while the operator matrix is
/// affine in `alpha`; equating the two eigenvectors and solving for `alpha`
/// yields the dictionary.
pub fn jack_parameter_for(k: &Rational) -> Result<Rational> {
    let lifted = jack_from_ho(&Weight::new(vec![2]), 2, k)?;
    let target = lifted.coeff(&Weight::new(vec![1, 1]));
    let basis = partitions(2, 2);
    let at_zero = operator_matrix(&basis, &Rational::zero());
    let at_one = operator_matrix(&basis, &Rational::one());
    let slope = |r: usize, c: usize| &at_one[r][c] - &at_zero[r][c];
    // Eigenvector coefficient: M10 / (M00 - M11), with M = alpha * A + B.
    let numerator = &at_zero[1][0] - &target * (&at_zero[0][0] - &at_zero[1][1]);
    let denominator = &target * (slope(0, 0) - slope(1, 1)) - slope(1, 0);
    if denominator.is_zero() {
        return Err(Error::Division(format!(
            "no Jack parameter reproduces k = {k}"
        )));
    }
    Ok(numerator / denominator)
}

/// Exact comparison of [`jack_from_ho`] at `k` with [`jack_oracle`] at
/// `alpha = 1/k`.
pub fn jack_crosscheck(lambda: &Weight, nvars: usize, k: &Rational) -> Result<bool> {
    if !k.is_positive() {
        return Err(Error::Domain(format!("k must be positive, got {k}")));
    }
    let alpha = Rational::one() / k;
    let lifted = jack_from_ho(lambda, nvars, k)?;
    let oracle = jack_oracle(lambda, nvars, &alpha)?;
    Ok(lifted.coeffs == oracle.coeffs)
}

/// `sum_mu c_mu m_mu(x)` at a point with positive coordinates.
pub fn jack_eval(exp: &MonomialExpansion, x: &[f64]) -> Result<f64> {
    if x.len() != exp.nvars {
        return Err(Error::Domain(format!(
            "point has {} coordinates, expected {}",
            x.len(),
            exp.nvars
        )));
    }
    if let Some(i) = x.iter().position(|&v| !(v.is_finite() && v > 0.0)) {
        return Err(Error::Domain(format!(
            "coordinate {i} must be positive and finite, got {}",
            x[i]
        )));
    }
    let mut total = 0.0;
    for (mu, c) in &exp.coeffs {
        let padded = mu.padded(exp.nvars)?;
        let orbit_sum: f64 = distinct_permutations(padded.entries())
            .iter()
            .map(|perm| {
                perm.iter()
                    .zip(x)
                    .map(|(&p, &v)| v.powi(p as i32))
                    .product::<f64>()
            })
            .sum();
        total += to_f64(c) * orbit_sum;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn lift_examples() {
        let k = rat(3, 7);
        for n in 1..4 {
            let j = jack_from_ho(&w(&[1]), n, &k).unwrap();
            assert_eq!(j.coeffs().len(), 1);
            assert_eq!(j.coeff(&w(&[1])), int(1));
        }
        let j = jack_from_ho(&w(&[1, 1]), 2, &k).unwrap();
        assert_eq!(j.coeffs().len(), 1);
        let j = jack_from_ho(&w(&[2]), 2, &k).unwrap();
        assert_eq!(j.coeff(&w(&[2])), int(1));
        assert_eq!(j.coeff(&w(&[1, 1])), int(2) * &k / (int(1) + &k));
    }

    #[test]
    fn oracle_examples() {
        let alpha = rat(5, 2);
        assert_eq!(jack_oracle(&w(&[1]), 3, &alpha).unwrap().coeffs().len(), 1);
        let j = jack_oracle(&w(&[2]), 2, &alpha).unwrap();
        assert_eq!(j.coeff(&w(&[1, 1])), int(2) / (&alpha + int(1)));
        let j = jack_oracle(&w(&[1, 1]), 2, &alpha).unwrap();
        assert_eq!(j.coeffs().len(), 1);
        assert!(jack_oracle(&w(&[2]), 2, &int(0)).is_err());
    }

    #[test]
    fn schur_case() {
        // alpha = 1: s_{2,1} = m_{2,1} + 2 m_{1,1,1}.
        let j = jack_oracle(&w(&[2, 1]), 3, &int(1)).unwrap();
        assert_eq!(j.coeff(&w(&[1, 1, 1])), int(2));
        let j = jack_from_ho(&w(&[2, 1]), 3, &int(1)).unwrap();
        assert_eq!(j.coeff(&w(&[1, 1, 1])), int(2));
    }

    #[test]
    fn crosscheck_examples() {
        assert!(jack_crosscheck(&w(&[2]), 2, &int(1)).unwrap());
        assert!(jack_crosscheck(&w(&[2]), 2, &rat(1, 2)).unwrap());
        assert!(jack_crosscheck(&w(&[1]), 3, &rat(3, 7)).unwrap());
        assert!(jack_crosscheck(&w(&[2]), 2, &int(-1)).is_err());
    }

    #[test]
    fn dictionary_is_reciprocal() {
        for k in [rat(1, 2), int(1), int(2), rat(3, 7), rat(11, 5)] {
            assert_eq!(jack_parameter_for(&k).unwrap(), Rational::one() / &k);
        }
    }

    #[test]
    fn eval_examples() {
        let m1 = jack_from_ho(&w(&[1]), 2, &int(1)).unwrap();
        assert_eq!(jack_eval(&m1, &[1.0, 1.0]).unwrap(), 2.0);
        let j = jack_from_ho(&w(&[2]), 2, &int(1)).unwrap();
        assert_eq!(jack_eval(&j, &[1.0, 1.0]).unwrap(), 3.0);
        assert!(jack_eval(&j, &[1.0, 0.0]).is_err());
        assert!(jack_eval(&j, &[1.0]).is_err());
    }

    #[test]
    fn partition_lists() {
        assert_eq!(
            partitions(4, 3),
            vec![w(&[4, 0, 0]), w(&[3, 1, 0]), w(&[2, 2, 0]), w(&[2, 1, 1])]
        );
        assert_eq!(partitions(0, 2), vec![w(&[0, 0])]);
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(matches!(
            jack_from_ho(&w(&[1, 1, 1]), 2, &int(1)),
            Err(Error::Arity { parts: 3, nvars: 2 })
        ));
        assert!(jack_from_ho(&w(&[1, 2]), 2, &int(1)).is_err());
    }
}
