use num_traits::{One, Signed, Zero};
use pinchlab::arith::{int, parse_rational, rat, to_f64, Point, Poly, RatFunc, Rational, Surd};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Poly::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Poly<Rational>> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn division_reconstructs(a in poly(8), b in nonzero_poly(5)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        if let Some(dr) = r.degree() {
            prop_assert!(dr < b.degree().unwrap());
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(6), b in poly(6), x in rational()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        prop_assert_eq!((&a - &b).eval(&x), a.eval(&x) - b.eval(&x));
    }

    #[test]
    fn product_rule(a in poly(6), b in poly(6)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let (pa, pb) = (&a * &c, &b * &c);
        let g = pa.gcd(&pb);
        prop_assert!(pa.rem(&g).unwrap().is_zero());
        prop_assert!(pb.rem(&g).unwrap().is_zero());
        // c divides the gcd
        prop_assert!(g.rem(&c).unwrap().is_zero());
        prop_assert!(g.lead().unwrap().is_one());
    }

    #[test]
    fn primitive_part_times_content(a in nonzero_poly(7)) {
        let (content, pp) = a.primitive_part();
        prop_assert!(content.is_positive());
        prop_assert_eq!(pp.scale(&content), a);
        prop_assert!(pp.coeffs().iter().all(|c| c.is_integer()));
    }

    #[test]
    fn zero_plus_sign_is_lowest_coefficient(a in nonzero_poly(7)) {
        let low = a.coeffs().iter().find(|c| !c.is_zero()).unwrap();
        prop_assert_eq!(a.sign_at(&Point::ZeroPlus), if low.is_positive() { 1 } else { -1 });
        let tiny = rat(1, 1_000_000_000);
        let (m, deflated) = a.deflate_zero_root().unwrap();
        prop_assert!(!deflated.coeff(0).is_zero());
        prop_assert_eq!(deflated.degree().unwrap() + m, a.degree().unwrap());
        // far enough inside (0, ε) the sign is already settled for small coefficients
        let v = a.eval(&tiny);
        if !v.is_zero() {
            prop_assert_eq!(a.sign_at(&Point::ZeroPlus), if v.is_positive() { 1 } else { -1 });
        }
    }

    #[test]
    fn composition_evaluates(a in poly(4), b in poly(3), x in rational()) {
        prop_assert_eq!(a.compose(&b).eval(&x), a.eval(&b.eval(&x)));
    }

    #[test]
    fn surd_sign_matches_float(a in rational(), b in rational(), r in 2u64..60) {
        let s = Surd::new(a, b, r);
        let f = s.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(s.signum() as f64, f.signum());
        }
        let sq = s.clone() * s.clone();
        prop_assert!((sq.to_f64() - f * f).abs() <= 1e-9 * (1.0 + f * f));
    }

    #[test]
    fn surd_reciprocal(a in rational(), b in rational(), r in 2u64..60) {
        let s = Surd::new(a, b, r);
        prop_assume!(s.signum() != 0);
        prop_assert_eq!(s.clone() * s.recip(), Surd::rational(Rational::one()));
    }

    #[test]
    fn rational_text_roundtrip(p in -100_000i64..100_000, q in 1i64..5_000) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r.clone());
        prop_assert!((to_f64(&r) - p as f64 / q as f64).abs() < 1e-12);
    }

    #[test]
    fn ratfunc_evaluation(a in nonzero_poly(4), b in nonzero_poly(3), x in rational()) {
        let f = RatFunc::new(a.clone(), b.clone()).unwrap();
        let g = RatFunc::from_poly(a.clone());
        let bv = b.eval(&x);
        prop_assume!(!bv.is_zero());
        prop_assert_eq!(f.eval(&x).unwrap(), a.eval(&x) / bv.clone());
        let prod = f.clone() * g.clone();
        prop_assert_eq!(prod.eval(&x).unwrap(), a.eval(&x) * a.eval(&x) / bv);
        prop_assert_eq!((f.clone() - f).eval(&x).unwrap(), int(0));
    }
}

#[test]
fn decimal_and_fraction_inputs() {
    assert_eq!(parse_rational("0.01").unwrap(), rat(1, 100));
    assert_eq!(parse_rational("-7/14").unwrap(), rat(-1, 2));
    assert_eq!(parse_rational("3").unwrap(), int(3));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("abc").is_err());
}
