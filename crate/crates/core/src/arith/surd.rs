use super::{sign_of, to_f64, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `a + b·√r` with `r` square-free. Values with `r ∈ {0, 1}` are stored
/// with `b = 0`, `r = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Surd {
    a: Rational,
    b: Rational,
    r: u64,
}

fn square_free_split(mut r: u64) -> (u64, u64) {
    // r = s^2 * f with f square-free; returns (s, f)
    let mut s = 1u64;
    let mut p = 2u64;
    while p * p <= r {
        while r % (p * p) == 0 {
            r /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, r)
}

impl Surd {
    pub fn new(a: Rational, b: Rational, r: u64) -> Self {
        if r == 0 || b.is_zero() {
            return Self::rational(a);
        }
        let (s, f) = square_free_split(r);
        let b = b * Rational::from_integer(BigInt::from(s));
        if f == 1 {
            return Self::rational(a + b);
        }
        Surd { a, b, r: f }
    }

    pub fn rational(a: Rational) -> Self {
        Surd {
            a,
            b: Rational::zero(),
            r: 1,
        }
    }

    /// `√m` for a nonnegative integer `m`.
    pub fn sqrt_of(m: u64) -> Self {
        Self::new(Rational::zero(), Rational::one(), m)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.r
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    fn common_radicand(&self, o: &Surd) -> u64 {
        match (self.is_rational(), o.is_rational()) {
            (true, _) => o.r,
            (_, true) => self.r,
            _ => {
                assert_eq!(self.r, o.r, "surds with distinct radicands");
                self.r
            }
        }
    }

    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2r = &self.b * &self.b * Rational::from_integer(BigInt::from(self.r));
        match a2.cmp(&b2r) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * (self.r as f64).sqrt()
    }

    pub fn recip(&self) -> Surd {
        let norm = &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.r));
        assert!(!norm.is_zero(), "reciprocal of zero surd");
        Surd {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
            r: self.r,
        }
    }

    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        (self.clone() - Surd::rational(q.clone())).signum().cmp(&0)
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        let r = self.common_radicand(&o);
        Surd::new(self.a + o.a, self.b + o.b, r)
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        self + (-o)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            a: -self.a,
            b: -self.b,
            r: self.r,
        }
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        let r = self.common_radicand(&o);
        let rr = Rational::from_integer(BigInt::from(r));
        Surd::new(
            &self.a * &o.a + &self.b * &o.b * rr,
            &self.a * &o.b + &self.b * &o.a,
            r,
        )
    }
}

impl Div for Surd {
    type Output = Surd;
    fn div(self, o: Surd) -> Surd {
        self * o.recip()
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, o: &Surd) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Surd {
    /// Panics when both operands carry distinct irrational radicands.
    fn cmp(&self, o: &Surd) -> Ordering {
        (self.clone() - o.clone()).signum().cmp(&0)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            write!(f, "({})*sqrt({})", self.b, self.r)
        } else {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{} {} ({})*sqrt({})", self.a, sign, self.b.abs(), self.r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn radicand_is_square_free() {
        let s = Surd::sqrt_of(18);
        assert_eq!((s.b().clone(), s.radicand()), (int(3), 2));
        assert_eq!(Surd::sqrt_of(49), Surd::rational(int(7)));
        assert_eq!(Surd::sqrt_of(0), Surd::rational(int(0)));
    }

    #[test]
    fn signs_of_mixed_terms() {
        // 17 - 12√2 is positive but tiny, 3 - 2√3 is negative
        assert_eq!(Surd::new(int(17), int(-12), 2).signum(), 1);
        assert_eq!(Surd::new(int(3), int(-2), 3).signum(), -1);
        assert_eq!(Surd::new(int(-3), int(2), 3).signum(), 1);
    }

    #[test]
    fn arithmetic_closes() {
        let x = Surd::new(int(1), int(1), 2);
        let y = Surd::new(int(1), int(-1), 2);
        assert_eq!(x.clone() * y.clone(), Surd::rational(int(-1)));
        assert_eq!(x.clone() / x.clone(), Surd::rational(int(1)));
        assert_eq!((x.clone() + y).as_rational(), Some(&int(2)));
        assert!(x.cmp_rational(&rat(12, 5)) == Ordering::Greater);
        assert!(x.cmp_rational(&rat(5, 2)) == Ordering::Less);
    }
}
