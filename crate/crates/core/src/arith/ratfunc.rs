use super::{sign_of, ArithError, Field, Poly, Rational};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Quotient of two polynomials in one parameter (called `n` throughout),
/// kept reduced with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RatFunc {
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.degree() == Some(0) {
                (num, den)
            } else {
                (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
            }
        };
        let l = Rational::one() / den.lead().unwrap().clone();
        RatFunc {
            num: num.scale(&l),
            den: den.scale(&l),
        }
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RatFunc {
            num: p,
            den: Poly::constant(Rational::one()),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The parameter itself.
    pub fn param() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rational> {
        &self.den
    }

    /// Value at a rational parameter, `None` at a pole.
    pub fn eval(&self, n: &Rational) -> Option<Rational> {
        let d = self.den.eval(n);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(n) / d)
        }
    }

    /// Sign for all sufficiently large parameter values.
    pub fn sign_at_infinity(&self) -> i8 {
        // Denominator is monic, so only the numerator matters.
        self.num.lead().map_or(0, sign_of)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::constant(Rational::one()),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        if self.den == o.den {
            return Self::reduce(&self.num + &o.num, self.den);
        }
        Self::reduce(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        self + (-o)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::reduce(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, o: RatFunc) -> RatFunc {
        assert!(!o.is_zero(), "division by the zero rational function");
        Self::reduce(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Field for RatFunc {
    fn from_i64(v: i64) -> Self {
        Self::constant(Rational::from_i64(v))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
