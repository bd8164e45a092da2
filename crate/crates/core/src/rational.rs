//! Exact rational scalars and their canonical text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Exact binary value of a finite float.
pub fn from_f64(value: f64) -> Result<Rational> {
    Rational::from_float(value)
        .ok_or_else(|| Error::Domain(format!("{value} is not a finite number")))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        // Overflowing magnitudes: fall back to the ratio of the parts.
        let n = value.numer().to_f64().unwrap_or(f64::NAN);
        let d = value.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Canonical `p/q` form: lowest terms, positive denominator, `/1` always
/// written out.
pub fn format_rational(value: &Rational) -> String {
    // `Ratio` keeps itself reduced with a positive denominator.
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses `p`, `p/q`, or a plain decimal such as `-0.25` into an exact
/// rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Domain(format!("cannot parse '{text}' as a rational"));
    if let Some((numer, denom)) = text.split_once('/') {
        let numer: BigInt = numer.trim().parse().map_err(|_| bad())?;
        let denom: BigInt = denom.trim().parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(Error::Domain(format!("zero denominator in '{text}'")));
        }
        return Ok(Rational::new(numer, denom));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let whole: BigInt = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            whole_digits.parse().map_err(|_| bad())?
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let magnitude = Rational::new(whole * &scale + frac, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let value: BigInt = text.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(value))
}
