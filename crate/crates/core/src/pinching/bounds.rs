use super::q::build_q;
use super::PinchingError;
use crate::arith::{int, rat, Rational, Surd};
use crate::sturm::{count_roots_in, nonpositive_on_positive_axis, Interval};
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Ordering;

/// Which bound is active in `c₁ = min(c₀, c₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    C0,
    C2,
}

/// One bisection probe: the tested α and the number of distinct positive
/// roots of `Q(·, k, n, α)` (after removing any root at 0).
#[derive(Debug, Clone, PartialEq)]
pub struct Probe {
    pub alpha: Rational,
    pub positive_roots: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsResult {
    pub n: i64,
    pub k: i64,
    /// Largest probed α certified to keep `Q ≤ 0` on `x > 0`.
    pub c0_lo: Rational,
    pub c0_hi: Rational,
    pub c2: Surd,
    pub c1: Surd,
    pub active: Branch,
    pub delta: Rational,
    pub iterations: usize,
    pub transcript: Vec<Probe>,
}

impl BoundsResult {
    /// Probes that failed the gate below an α that later passed. The
    /// bisection assumes the certified set is an interval; these would
    /// contradict that.
    pub fn monotonicity_findings(&self) -> Vec<(Rational, Rational)> {
        let mut out = Vec::new();
        for (i, bad) in self.transcript.iter().enumerate().filter(|(_, p)| !p.passed) {
            for good in self.transcript[i + 1..].iter().filter(|p| p.passed) {
                if good.alpha > bad.alpha {
                    out.push((bad.alpha.clone(), good.alpha.clone()));
                }
            }
        }
        out
    }
}

/// The initial bracket for the bisection.
pub fn initial_bracket(k: i64, delta: &Rational) -> (Rational, Rational) {
    let lo = rat(1, k);
    let hi = if k == 1 { int(6) } else { rat(1, k - 1) + delta };
    (lo, hi)
}

/// Exact gate: `Q(·, k, n, α) ≤ 0` on `(0, ∞)`.
pub fn probe(k: i64, n: i64, alpha: &Rational) -> Result<Probe, PinchingError> {
    let q = build_q(k, n, alpha)?;
    let positive_roots = if q.is_zero() {
        0
    } else {
        count_roots_in(&q, &Interval::PositiveAxis)?
    };
    Ok(Probe {
        alpha: alpha.clone(),
        positive_roots,
        passed: nonpositive_on_positive_axis(&q),
    })
}

/// Bisection for `c₀(n, k)` with exact rational midpoints.
pub fn c0_bisect(n: i64, k: i64, delta: &Rational) -> Result<BoundsResult, PinchingError> {
    if delta <= &int(0) {
        return Err(PinchingError::NonPositiveDelta(delta.clone()));
    }
    let (mut lo, mut hi) = initial_bracket(k, delta);
    let start = probe(k, n, &lo)?;
    if !start.passed {
        return Err(PinchingError::InitialGateFailed { n, k });
    }
    let mut transcript = Vec::new();
    while &hi - &lo >= *delta {
        let mid = (&lo + &hi) / int(2);
        let p = probe(k, n, &mid)?;
        if p.passed {
            lo = mid;
        } else {
            hi = mid;
        }
        transcript.push(p);
    }
    let c2 = c2_closed_form(n, k)?;
    let (c1, active) = combine(&lo, &c2);
    Ok(BoundsResult {
        n,
        k,
        c0_lo: lo,
        c0_hi: hi,
        c2,
        c1,
        active,
        delta: delta.clone(),
        iterations: transcript.len(),
        transcript,
    })
}

/// Whether `c₂(n, k)` uses the square-root branch.
pub fn c2_uses_surd_branch(n: i64, k: i64) -> bool {
    k == 1 || k == 2 || (k >= 3 && n > k * (k - 1))
}

/// `c₂(n, k)`, exact.
pub fn c2_closed_form(n: i64, k: i64) -> Result<Surd, PinchingError> {
    if n < 3 || k < 1 || k > n {
        return Err(PinchingError::Range { n, k });
    }
    if !c2_uses_surd_branch(n, k) {
        return Ok(Surd::rational(rat(1, k - 2)));
    }
    let radicand = n * (n - k) * (n + 2 - 2 * k);
    let radicand = u64::try_from(radicand).map_err(|_| PinchingError::Range { n, k })?;
    let num = Surd::new(int(-2 * k * (n + 2) + n * (6 + n)), int(4), radicand);
    Ok(num / Surd::rational(int(k * (n - 2) * (n - 2))))
}

fn combine(c0: &Rational, c2: &Surd) -> (Surd, Branch) {
    match c2.cmp_rational(c0) {
        Ordering::Less => (c2.clone(), Branch::C2),
        _ => (Surd::rational(c0.clone()), Branch::C0),
    }
}

/// `c₁ = min(c₀, c₂)` with the bisection details attached.
pub fn c1_combined(n: i64, k: i64, delta: &Rational) -> Result<BoundsResult, PinchingError> {
    c0_bisect(n, k, delta)
}

/// All `(n, k)` pairs in the given ranges with `k ≤ n`, in `(n, k)` order,
/// computed in parallel.
pub fn bounds_table(
    ns: std::ops::RangeInclusive<i64>,
    ks: std::ops::RangeInclusive<i64>,
    delta: &Rational,
) -> Result<Vec<BoundsResult>, PinchingError> {
    let pairs: Vec<(i64, i64)> = ns
        .flat_map(|n| ks.clone().filter(move |&k| k <= n).map(move |k| (n, k)))
        .collect();
    pairs
        .par_iter()
        .map(|&(n, k)| c1_combined(n, k, delta))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c0_three_one() {
        let r = c0_bisect(3, 1, &rat(1, 100)).unwrap();
        assert!(r.c0_lo >= rat(363, 100) && r.c0_lo <= rat(365, 100), "{}", r.c0_lo);
        assert!(&r.c0_hi - &r.c0_lo < rat(1, 100));
        assert_eq!(r.active, Branch::C0);
    }

    #[test]
    fn c2_values() {
        let c = c2_closed_form(3, 1).unwrap();
        assert!((c.to_f64() - 33.970562748).abs() < 1e-8);
        assert_eq!(c2_closed_form(4, 3).unwrap(), Surd::rational(int(1)));
        // (4√3 + 7)/2
        let c = c2_closed_form(3, 2).unwrap();
        assert_eq!(c, Surd::new(rat(7, 2), int(2), 3));
    }

    #[test]
    fn c2_is_discriminant_root() {
        // D(α) = (kα(2k−n−2)+n)² + 4(n−k)(1+kα)k((k−2)α−1)
        for (n, k) in [(3, 1), (7, 2), (12, 3), (20, 4)] {
            let a = c2_closed_form(n, k).unwrap();
            let s = |v: i64| Surd::rational(int(v));
            let b = s(k) * a.clone() * s(2 * k - n - 2) + s(n);
            let d = b.clone() * b
                + s(4 * (n - k) * k) * (s(1) + s(k) * a.clone()) * (s(k - 2) * a - s(1));
            assert_eq!(d.signum(), 0, "n={n} k={k}");
        }
    }

    #[test]
    fn sandwich_small() {
        let r = c0_bisect(9, 3, &rat(1, 100)).unwrap();
        assert!(&rat(1, 2) - &r.c0_lo <= rat(1, 100));
        assert!(r.c0_hi <= rat(1, 2) + rat(1, 100));
    }

    #[test]
    fn rejects_bad_delta() {
        assert!(c0_bisect(3, 1, &int(0)).is_err());
    }
}
