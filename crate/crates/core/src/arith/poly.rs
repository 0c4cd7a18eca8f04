use super::{sign_of, ArithError, Field, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Where a sign is sampled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Point {
    /// Limit from the right at 0.
    ZeroPlus,
    PosInf,
    At(Rational),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::ZeroPlus => write!(f, "0+"),
            Point::PosInf => write!(f, "+inf"),
            Point::At(a) => write!(f, "{a}"),
        }
    }
}

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Field> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·x^d`.
    pub fn monomial(c: T, d: usize) -> Self {
        let mut v = vec![T::zero(); d];
        v.push(c);
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Long division over the field: returns `(quot, rem)` with
    /// `self = quot·q + rem` and `deg rem < deg q`.
    pub fn div_rem(&self, q: &Self) -> Result<(Self, Self), ArithError> {
        let dq = q.degree().ok_or(ArithError::DivisionByZeroPoly)?;
        let lead = q.coeffs[dq].clone();
        let mut r = self.coeffs.clone();
        let Some(dp) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if dp < dq {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); dp - dq + 1];
        for i in (0..=dp - dq).rev() {
            let c = r[i + dq].clone();
            if c.is_zero() {
                continue;
            }
            let f = c / lead.clone();
            for (j, qc) in q.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - f.clone() * qc.clone();
            }
            // Force exact cancellation even if the field's equality is
            // structural rather than canonical.
            r[i + dq] = T::zero();
            quot[i] = f;
        }
        r.truncate(dq);
        Ok((Self::new(quot), Self::new(r)))
    }

    pub fn rem(&self, q: &Self) -> Result<Self, ArithError> {
        self.div_rem(q).map(|(_, r)| r)
    }

    /// Splits `self = x^m · q` with `q(0) != 0`.
    pub fn deflate_zero_root(&self) -> Result<(usize, Self), ArithError> {
        let m = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(ArithError::ZeroPolynomial)?;
        Ok((m, Self::new(self.coeffs[m..].to_vec())))
    }

    /// Replace the variable: `self(y)` where `y` is itself a polynomial.
    pub fn compose(&self, y: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * y) + &Self::constant(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(T::one()), |acc, _| &acc * self)
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Rational> {
    pub fn from_rationals(cs: Vec<Rational>) -> Self {
        Self::new(cs)
    }

    pub fn sign_at(&self, point: &Point) -> i8 {
        match point {
            Point::PosInf => self.lead().map_or(0, sign_of),
            Point::ZeroPlus => self
                .coeffs
                .iter()
                .find(|c| !c.is_zero())
                .map_or(0, sign_of),
            Point::At(a) => sign_of(&self.eval(a)),
        }
    }

    /// Positive rational `c` and integer-coefficient polynomial `p` with
    /// coprime coefficients such that `self = c·p`. The zero polynomial gives
    /// `(1, 0)`.
    pub fn primitive_part(&self) -> (Rational, Self) {
        if self.is_zero() {
            return (Rational::one(), Self::zero());
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let content = Rational::new(g.clone(), den_lcm);
        let prim = Self::new(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &g))
                .collect(),
        );
        (content, prim)
    }

    /// Upper bound on the absolute value of every real root (Cauchy).
    pub fn cauchy_bound(&self) -> Option<Rational> {
        let lead = self.lead()?.abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / lead.clone())
            .fold(Rational::zero(), |a, b| if b > a { b } else { a });
        Some(Rational::one() + m)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part().1;
        }
        match a.lead().cloned() {
            Some(l) => a.scale(&(Rational::one() / l)),
            None => a,
        }
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(super::to_f64).collect()
    }
}

impl<T: Field> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<T: Field> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<T: Field> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: &Poly<T>) -> Poly<T> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Field> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Field + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}
