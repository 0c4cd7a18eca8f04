mod common;

use common::random_factored;
use num_traits::Zero;
use pinchlab::arith::{int, rat, Point, Poly, Rational};
use pinchlab::pinching::{build_q, q_one_plus_seven_over_n};
use pinchlab::sturm::{
    count_roots_in, nonpositive_on_positive_axis, Interval, ParamSturmSeq, SturmSeq,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn float_scan_is_nonpositive(q: &Poly<Rational>) -> bool {
    let c = q.to_f64_coeffs();
    (1..=10_000).all(|j| {
        let x = j as f64 / 100.0;
        c.iter().rev().fold(0.0, |acc, a| acc * x + a) <= 0.0
    })
}

#[test]
fn positive_root_counts_match_factorizations() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..300 {
        let f = random_factored(&mut rng);
        let got = count_roots_in(&f.poly, &Interval::PositiveAxis).unwrap();
        assert_eq!(got, f.positive_roots, "{}", f.poly);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn counts_above_any_rational(seed in any::<u64>(), num in -60i64..60, den in 1i64..7) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = random_factored(&mut rng);
        let a = rat(num, den);
        prop_assume!(!f.poly.eval(&a).is_zero());
        let af = num as f64 / den as f64;
        let expect = f.real_roots.iter().filter(|r| **r > af).count();
        prop_assert_eq!(count_roots_in(&f.poly, &Interval::Above(a)).unwrap(), expect);
    }

    #[test]
    fn interval_counts_are_additive(seed in any::<u64>(), a in -30i64..30, gap in 1i64..30) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = random_factored(&mut rng);
        // sevenths never coincide with generated roots (denominators up to 5)
        let (lo, hi) = (rat(7 * a + 1, 7), rat(7 * (a + gap) + 1, 7));
        let s = SturmSeq::build(&f.poly).unwrap();
        let between = s.sign_changes(&Point::At(lo.clone())) - s.sign_changes(&Point::At(hi.clone()));
        let above_lo = count_roots_in(&f.poly, &Interval::Above(lo.clone())).unwrap();
        let above_hi = count_roots_in(&f.poly, &Interval::Above(hi.clone())).unwrap();
        prop_assert_eq!(between, above_lo - above_hi);
    }

    #[test]
    fn gate_agrees_with_factor_signs(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = random_factored(&mut rng);
        // without positive roots the sign on (0, ∞) is the sign at 0+
        let expect = f.positive_roots == 0 && f.poly.sign_at(&Point::ZeroPlus) < 0;
        prop_assert_eq!(nonpositive_on_positive_axis(&f.poly), expect);
    }
}

#[test]
fn q_below_and_above_the_three_one_constant() {
    let below = build_q(1, 3, &rat(7, 2)).unwrap();
    assert_eq!(count_roots_in(&below, &Interval::PositiveAxis).unwrap(), 0);
    assert!(nonpositive_on_positive_axis(&below));
    assert!(float_scan_is_nonpositive(&below));

    let above = build_q(1, 3, &int(4)).unwrap();
    assert!(!nonpositive_on_positive_axis(&above));
    assert!(!float_scan_is_nonpositive(&above));
}

#[test]
fn parametric_sequence_specializes_to_direct_counts() {
    let p = q_one_plus_seven_over_n();
    let s = ParamSturmSeq::build(&p, &int(12)).unwrap();
    let (z, inf) = (s.sigma_zero().unwrap(), s.sigma_infinity().unwrap());
    assert_eq!((z, inf), (3, 3));
    for n in [13i64, 40, 311] {
        let nv = int(n);
        let specialized = s.specialize(&nv).unwrap();
        let at = |pt: &Point| {
            pinchlab::sturm::count_changes(&specialized.iter().map(|q| q.sign_at(pt)).collect::<Vec<_>>())
        };
        assert_eq!(at(&Point::ZeroPlus), z, "n={n}");
        assert_eq!(at(&Point::PosInf), inf, "n={n}");
        let direct = build_q(1, n, &(int(1) + rat(7, n))).unwrap();
        assert_eq!(count_roots_in(&direct, &Interval::PositiveAxis).unwrap(), 0);
    }
}
