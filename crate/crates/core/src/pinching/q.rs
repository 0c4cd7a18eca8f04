//! The sextic `Q(x, k, n, α)` whose nonpositivity on `x > 0` controls the
//! gradient terms in the evolution of the pinching quantity.

use super::PinchingError;
use crate::arith::{int, Field, Poly, Rational};
use num_traits::Signed;

/// The seven coefficients of `Q`, ascending in `x`, over any field.
pub fn q_coefficients<T: Field>(k: &T, n: &T, a: &T) -> [T; 7] {
    let c = |v: i64| T::from_i64(v);
    let (k, n, a) = (k.clone(), n.clone(), a.clone());
    let k2 = k.clone() * k.clone();
    let k3 = k2.clone() * k.clone();
    let n2 = n.clone() * n.clone();
    let a2 = a.clone() * a.clone();
    let kn = k.clone() * n.clone();

    let c6 = k2.clone()
        * (a.clone() * (k.clone() - c(1)) - c(1))
        * (a.clone() * (k.clone() + c(2)) - c(1));

    let c5 = k.clone()
        * (a2.clone()
            * k.clone()
            * (c(-4) * k2.clone() + c(3) * k.clone() * (n.clone() - c(2)) + n.clone() + c(6))
            + a.clone() * (c(10) * k2.clone() - c(6) * kn.clone() - n.clone())
            + c(3) * n.clone()
            - c(6) * k.clone());

    let c4 = a2.clone()
        * k2.clone()
        * (c(6) * k2.clone() + c(3) * k.clone() * (c(4) - c(3) * n.clone()) + c(2) * n2.clone()
            - c(5) * n.clone()
            - c(6))
        + a.clone()
            * k.clone()
            * (k3.clone() - c(24) * k2.clone()
                + c(2) * k.clone() * (c(11) * n.clone() + c(3))
                - n.clone() * (c(4) * n.clone() + c(1)))
        - k3.clone()
        + c(12) * k2.clone()
        - c(13) * kn.clone()
        + c(2) * n2.clone();

    let c3 = a2.clone()
        * k2.clone()
        * (c(-4) * k2.clone() + k.clone() * (c(9) * n.clone() - c(10)) - c(4) * n2.clone()
            + c(7) * n.clone()
            + c(2))
        + a.clone()
            * k.clone()
            * (c(-4) * k3.clone() + k2.clone() * (c(3) * n.clone() + c(32))
                - c(2) * k.clone() * (c(19) * n.clone() + c(4))
                + c(5) * n.clone() * (c(2) * n.clone() + c(1)))
        + c(2) * k3.clone()
        - k2.clone() * (c(3) * n.clone() + c(10))
        + c(17) * kn.clone()
        - c(6) * n2.clone();

    let c2 = (k.clone() - n.clone())
        * (a2.clone() * k2.clone() * (k.clone() - c(2) * n.clone() + c(3))
            + a.clone()
                * k.clone()
                * (c(6) * k2.clone() - k.clone() * (c(3) * n.clone() + c(22))
                    + c(12) * n.clone()
                    + c(3))
            + c(3) * k.clone() * (n.clone() + c(1))
            - c(4) * n.clone());

    let nk = n.clone() - k.clone();
    let c1 = nk.clone()
        * nk.clone()
        * (-(a.clone() * k.clone() * (c(4) * k.clone() - n.clone() - c(6)))
            - c(2) * k.clone()
            - n.clone());

    let kn_diff = k.clone() - n.clone();
    let c0 = (a * k + c(1)) * kn_diff.clone() * kn_diff.clone() * kn_diff;

    [c0, c1, c2, c3, c4, c5, c6]
}

fn check_range(k: i64, n: i64) -> Result<(), PinchingError> {
    if n < 3 || k < 1 || k > n {
        return Err(PinchingError::Range { n, k });
    }
    Ok(())
}

/// `Q(x, k, n, α)` as an exact polynomial in `x`.
pub fn build_q(k: i64, n: i64, alpha: &Rational) -> Result<Poly<Rational>, PinchingError> {
    check_range(k, n)?;
    if !alpha.is_positive() {
        return Err(PinchingError::NonPositiveAlpha(alpha.clone()));
    }
    Ok(Poly::new(q_coefficients(&int(k), &int(n), alpha).to_vec()))
}

/// `Q = A·α² + B·α + C` for fixed `k`, `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct QDecomposition {
    pub a: Poly<Rational>,
    pub b: Poly<Rational>,
    pub c: Poly<Rational>,
}

impl QDecomposition {
    pub fn eval(&self, alpha: &Rational) -> Poly<Rational> {
        &(&self.a.scale(&(alpha * alpha)) + &self.b.scale(alpha)) + &self.c
    }

    /// The three coefficients of the inner quadratic in the factored form
    /// `A = k²x²(x−1)²·(q₂x² + q₁x + q₀)`, returned as `[q₀, q₁, q₂]`.
    pub fn printed_inner_quadratic(k: i64, n: i64) -> [Rational; 3] {
        [
            int((n - k) * (2 * n - k - 3)),
            int(n * (3 * k + 1) - 2 * k * k - 4 * k + 2),
            int(k * k + k - 2),
        ]
    }

    /// The printed factored form of `A`.
    pub fn printed_a(k: i64, n: i64) -> Poly<Rational> {
        let inner = Poly::new(Self::printed_inner_quadratic(k, n).to_vec());
        let x2 = Poly::<Rational>::monomial(int(k * k), 2);
        let xm1_sq = Poly::<Rational>::from_i64s(&[-1, 1]).pow(2);
        &(&x2 * &xm1_sq) * &inner
    }
}

/// Splits `Q` into its α-quadratic parts by sampling at α = 0, 1, −1.
pub fn alpha_decomposition(k: i64, n: i64) -> Result<QDecomposition, PinchingError> {
    check_range(k, n)?;
    let at = |a: i64| Poly::new(q_coefficients(&int(k), &int(n), &int(a)).to_vec());
    let (q0, q1, qm1) = (at(0), at(1), at(-1));
    let half = crate::arith::rat(1, 2);
    // Q(1) + Q(-1) = 2A + 2C, Q(1) - Q(-1) = 2B
    let a = (&(&(&q1 + &qm1) - &q0) - &q0).scale(&half);
    let b = (&q1 - &qm1).scale(&half);
    Ok(QDecomposition { a, b, c: q0 })
}

/// `−2(n + (x−1)(k+x))³`, the value of `Q` at α = 1/k.
pub fn q_at_reciprocal_k(k: i64, n: i64) -> Poly<Rational> {
    // n + (x-1)(k+x) = x^2 + (k-1)x + (n-k)
    let inner = Poly::<Rational>::from_i64s(&[n - k, k - 1, 1]);
    inner.pow(3).scale(&int(-2))
}

pub(crate) fn is_nonpositive_coeffwise(p: &Poly<Rational>) -> Option<usize> {
    p.coeffs().iter().position(|c| c.is_positive())
}
