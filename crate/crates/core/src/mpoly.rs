//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Used for the symbolic side of the Hermite addition formula and for the
//! monomial-basis Jack operator. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::Zero;

use crate::rational::Rational;

pub type Exponent = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, value: Rational) -> Self {
        Self::monomial(vec![0; nvars], value)
    }

    pub fn monomial(exponent: Exponent, coeff: Rational) -> Self {
        let mut poly = Self::zero(exponent.len());
        poly.add_term(exponent, coeff);
        poly
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    pub fn coeff(&self, exponent: &[u32]) -> Rational {
        self.terms
            .get(exponent)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exponent: Exponent, coeff: Rational) {
        assert_eq!(exponent.len(), self.nvars, "exponent arity mismatch");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent);
        match entry {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * factor);
        }
        out
    }

    /// Largest exponent of `var` over all terms.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mono: f64 = e
                    .iter()
                    .zip(point)
                    .map(|(&p, &x)| x.powi(p as i32))
                    .product();
                crate::rational::to_f64(c) * mono
            })
            .sum()
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}
