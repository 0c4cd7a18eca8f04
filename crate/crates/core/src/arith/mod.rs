//! Exact arithmetic: rationals, dense univariate polynomials over a field,
//! rational functions in one parameter, and single-radicand quadratic surds.

mod poly;
mod ratfunc;
mod surd;

pub use poly::{Point, Poly};
pub use ratfunc::RatFunc;
pub use surd::Surd;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("zero polynomial has no finite multiplicity at 0")]
    ZeroPolynomial,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// Coefficient field for [`Poly`]. Implemented for [`Rational`] and for
/// [`RatFunc`] (the field of fractions in the parameter `n`).
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

impl Field for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
}

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    // Large numerators and denominators can overflow individually even when
    // the quotient is representable, so shift both down first.
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let (n, d) = (r.numer(), r.denom());
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Parses `"3"`, `"-7/2"`, or a plain decimal such as `"0.01"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let t = s.trim();
    let err = || ArithError::Parse(s.to_string());
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !whole_digits.chars().all(|c| c.is_ascii_digit())
            || (whole_digits.is_empty() && frac.is_empty())
        {
            return Err(err());
        }
        let digits = format!("{whole_digits}{frac}");
        let mag: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| err())?
        };
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let v = Rational::new(mag, den);
        return Ok(if negative { -v } else { v });
    }
    let v: BigInt = t.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(v))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(parse_rational("0.01").unwrap(), rat(1, 100));
        assert_eq!(parse_rational("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn rational_is_normalized() {
        let r = Rational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = Rational::new(BigInt::from(0), BigInt::from(-9));
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn huge_to_f64() {
        let big = num_traits::pow(BigInt::from(10), 400);
        let r = Rational::new(big.clone() * 3, big);
        assert!((to_f64(&r) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(3, 1), 3);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(2, 3), 0);
    }
}
