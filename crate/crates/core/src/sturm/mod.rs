//! Standard Sturm sequences and exact distinct-real-root counting.

mod param;

pub use param::{ParamSturmSeq, RemovedFactor};

use crate::arith::{ArithError, Point, Poly, Rational};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SturmError {
    #[error("Sturm sequence of a constant polynomial")]
    ConstantInput,
    #[error("root counting on the zero polynomial")]
    ZeroPolynomial,
    #[error("endpoint {0} is a root; perturb or deflate before counting")]
    EndpointRoot(Rational),
    #[error("normalizing factor {factor} cannot be certified positive for n > {threshold}")]
    UncertifiedFactor { factor: String, threshold: Rational },
    #[error("parametric leading coefficient is zero")]
    ZeroLeading,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Open interval queried by [`count_roots_in`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Interval {
    /// `(0, ∞)`, with the left end sampled at `0+`.
    PositiveAxis,
    /// `(a, ∞)`.
    Above(Rational),
}

/// `p_0 = p`, `p_1 = p'`, `p_{i+1} = -rem(p_{i-1}, p_i) / s_i` with each
/// recorded `s_i > 0`, stopping when the remainder vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct SturmSeq {
    polys: Vec<Poly<Rational>>,
    scales: Vec<Rational>,
}

impl SturmSeq {
    pub fn build(p: &Poly<Rational>) -> Result<Self, SturmError> {
        match p.degree() {
            None | Some(0) => return Err(SturmError::ConstantInput),
            _ => {}
        }
        let mut polys = vec![p.clone(), p.derivative()];
        let mut scales = Vec::new();
        loop {
            let m = polys.len();
            let r = polys[m - 2].rem(&polys[m - 1])?;
            if r.is_zero() {
                break;
            }
            // Dividing by the positive content keeps coefficients small
            // without changing any sign.
            let (s, prim) = (-&r).primitive_part();
            polys.push(prim);
            scales.push(s);
        }
        Ok(SturmSeq { polys, scales })
    }

    pub fn polys(&self) -> &[Poly<Rational>] {
        &self.polys
    }

    /// `s_i` for each element beyond `p_1`.
    pub fn scales(&self) -> &[Rational] {
        &self.scales
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn signs_at(&self, point: &Point) -> Vec<i8> {
        self.polys.iter().map(|p| p.sign_at(point)).collect()
    }

    pub fn sign_changes(&self, point: &Point) -> usize {
        count_changes(&self.signs_at(point))
    }
}

/// Strict alternations in a sign vector, zeros skipped.
pub fn count_changes(signs: &[i8]) -> usize {
    let mut prev = 0i8;
    let mut changes = 0;
    for &s in signs.iter().filter(|&&s| s != 0) {
        if prev != 0 && s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

fn count_deflated(q: &Poly<Rational>, left: &Point) -> Result<usize, SturmError> {
    if q.degree() == Some(0) {
        return Ok(0);
    }
    let seq = SturmSeq::build(q)?;
    let l = seq.sign_changes(left);
    let r = seq.sign_changes(&Point::PosInf);
    Ok(l.saturating_sub(r))
}

/// Number of distinct real roots of `p` strictly inside the interval.
pub fn count_roots_in(p: &Poly<Rational>, interval: &Interval) -> Result<usize, SturmError> {
    if p.is_zero() {
        return Err(SturmError::ZeroPolynomial);
    }
    let (m, q) = p.deflate_zero_root()?;
    match interval {
        Interval::PositiveAxis => count_deflated(&q, &Point::ZeroPlus),
        Interval::Above(a) => {
            if q.eval(a).is_zero() {
                return Err(SturmError::EndpointRoot(a.clone()));
            }
            let zero_inside = usize::from(m > 0 && a.is_negative());
            Ok(count_deflated(&q, &Point::At(a.clone()))? + zero_inside)
        }
    }
}

/// True iff `p(x) <= 0` for every `x > 0`, decided exactly. After removing
/// any `x^m` factor, the remaining polynomial must have no positive root and
/// be negative just right of zero.
pub fn nonpositive_on_positive_axis(p: &Poly<Rational>) -> bool {
    if p.is_zero() {
        return true;
    }
    let (_, q) = p.deflate_zero_root().expect("nonzero");
    q.sign_at(&Point::ZeroPlus) < 0
        && count_deflated(&q, &Point::ZeroPlus).expect("nonconstant or constant handled") == 0
}

/// True iff `p` has no real root greater than `a`. Requires `p(a) != 0`.
pub fn certify_no_roots_above(p: &Poly<Rational>, a: &Rational) -> Result<bool, SturmError> {
    if p.is_zero() {
        return Err(SturmError::ZeroPolynomial);
    }
    if p.eval(a).is_zero() {
        return Err(SturmError::EndpointRoot(a.clone()));
    }
    Ok(count_roots_in(p, &Interval::Above(a.clone()))? == 0)
}

/// Sign of `p` on the whole of `(a, ∞)` if it is constant there, allowing
/// `p(a) = 0` by dividing out the root at `a` first.
pub fn sign_beyond(p: &Poly<Rational>, a: &Rational) -> Result<Option<i8>, SturmError> {
    if p.is_zero() {
        return Err(SturmError::ZeroPolynomial);
    }
    let lin = Poly::new(vec![-a.clone(), Rational::one()]);
    let mut q = p.clone();
    while q.eval(a).is_zero() {
        q = q.div_rem(&lin)?.0;
    }
    if certify_no_roots_above(&q, a)? {
        Ok(Some(p.sign_at(&Point::PosInf)))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    type P = Poly<Rational>;

    #[test]
    fn sequence_of_x2_minus_1() {
        let s = SturmSeq::build(&P::from_i64s(&[-1, 0, 1])).unwrap();
        assert_eq!(
            s.polys(),
            &[P::from_i64s(&[-1, 0, 1]), P::from_i64s(&[0, 2]), P::from_i64s(&[1])]
        );
        assert_eq!(s.sign_changes(&Point::ZeroPlus), 1);
        assert_eq!(s.sign_changes(&Point::PosInf), 0);
    }

    #[test]
    fn repeated_root_ends_early() {
        let s = SturmSeq::build(&P::from_i64s(&[0, 0, 1])).unwrap();
        assert_eq!(s.polys(), &[P::from_i64s(&[0, 0, 1]), P::from_i64s(&[0, 2])]);
    }

    #[test]
    fn constant_rejected() {
        assert_eq!(SturmSeq::build(&P::from_i64s(&[3])), Err(SturmError::ConstantInput));
    }

    #[test]
    fn counts() {
        let p = P::from_i64s(&[-1, 0, 1]);
        assert_eq!(count_roots_in(&p, &Interval::PositiveAxis).unwrap(), 1);
        assert_eq!(count_roots_in(&p, &Interval::Above(int(-2))).unwrap(), 2);
        assert_eq!(
            count_roots_in(&p, &Interval::Above(int(1))),
            Err(SturmError::EndpointRoot(int(1)))
        );
        // x^2 only has its root at 0
        assert_eq!(count_roots_in(&P::from_i64s(&[0, 0, 1]), &Interval::PositiveAxis).unwrap(), 0);
        assert_eq!(count_roots_in(&P::from_i64s(&[0, 0, 1]), &Interval::Above(int(-1))).unwrap(), 1);
    }

    #[test]
    fn nonpositivity() {
        let q = P::from_i64s(&[-16, 0, -24, 0, -12, 0, -2]);
        assert!(nonpositive_on_positive_axis(&q));
        assert!(!nonpositive_on_positive_axis(&P::from_i64s(&[1, -2, 1])));
        assert!(nonpositive_on_positive_axis(&P::zero()));
        assert!(nonpositive_on_positive_axis(&P::from_i64s(&[0, 0, 0, -1])));
        // -(x-1)^2 touches zero at 1 but stays nonpositive; distinct-root
        // counting sees the root, so the gate rejects it
        assert!(!nonpositive_on_positive_axis(&P::from_i64s(&[-1, 2, -1])));
    }

    #[test]
    fn certify_above() {
        assert!(!certify_no_roots_above(&P::from_i64s(&[-13, 1]), &int(12)).unwrap());
        assert!(certify_no_roots_above(&P::from_i64s(&[-11, 1]), &int(12)).unwrap());
        assert!(certify_no_roots_above(&P::from_i64s(&[-12, 1]), &int(12)).is_err());
        assert_eq!(sign_beyond(&P::from_i64s(&[-12, 1]), &int(12)).unwrap(), Some(1));
        assert_eq!(sign_beyond(&P::from_i64s(&[-13, 1]), &rat(25, 2)).unwrap(), None);
    }

    #[test]
    fn scale_identity_holds() {
        let p = P::from_i64s(&[3, -7, 0, 2, 5, -1, 1]);
        let s = SturmSeq::build(&p).unwrap();
        let ps = s.polys();
        for i in 1..ps.len() - 1 {
            let combo = &ps[i - 1] + &ps[i + 1].scale(&s.scales()[i - 1]);
            assert!(combo.rem(&ps[i]).unwrap().is_zero());
        }
    }
}
