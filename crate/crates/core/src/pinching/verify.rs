use super::bounds::{c0_bisect, c2_closed_form, c2_uses_surd_branch, probe};
use super::fixtures::{self, I_SIGNS, Q_SIGNS_AT_12, Q_SIGNS_AT_INF, Z_SIGNS};
use super::q::{build_q, is_nonpositive_coeffwise, q_coefficients};
use super::PinchingError;
use crate::arith::{int, rat, Field, Point, Poly, RatFunc, Rational, Surd};
use crate::sturm::{
    certify_no_roots_above, count_changes, nonpositive_on_positive_axis, sign_beyond,
    ParamSturmSeq, SturmSeq,
};
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First offending instance, when the check failed.
    pub witness: Option<String>,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            witness: None,
            detail: detail.into(),
        }
    }

    fn from_witness(name: impl Into<String>, witness: Option<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: witness.is_none(),
            witness,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "[{tag}] {}: {}", c.name, c.detail)?;
            if let Some(w) = &c.witness {
                write!(f, " (witness: {w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn first<T>(items: impl IntoIterator<Item = Option<T>>) -> Option<T> {
    items.into_iter().flatten().next()
}

/// Coefficientwise nonpositivity of `Q(x, k, n, 1/(k−1))` for
/// `2 ≤ k ≤ k_max`, `k ≤ n ≤ k²`, plus the printed closed forms.
pub fn verify_prop_a1(k_max: i64) -> Result<Report, PinchingError> {
    let mut checks = Vec::new();
    let pairs: Vec<(i64, i64)> = (2..=k_max.max(2))
        .flat_map(|k| (k.max(3)..=k * k).map(move |n| (k, n)))
        .collect();
    let qs: Vec<(i64, i64, Poly<Rational>)> = pairs
        .par_iter()
        .map(|&(k, n)| build_q(k, n, &rat(1, k - 1)).map(|q| (k, n, q)))
        .collect::<Result<_, _>>()?;

    let w = first(qs.iter().map(|(k, n, q)| {
        is_nonpositive_coeffwise(q).map(|i| format!("k={k} n={n} coefficient x^{i} = {}", q.coeff(i)))
    }));
    checks.push(Check::from_witness(
        "coefficients nonpositive",
        w,
        format!("{} pairs with 2 <= k <= {k_max}, k <= n <= k^2", qs.len()),
    ));

    // Closed forms at α = 1/(k−1).
    let mut w = None;
    for (k, n, q) in &qs {
        let (k, n) = (*k, *n);
        let km1 = int(k - 1);
        let expect = [
            (6, int(0)),
            (1, int((n - k) * (n - k) * (n - 6 * k * k + 8 * k)) / km1.clone()),
            (
                2,
                int(k - n) / (km1.clone() * km1.clone())
                    * int(2 * k * k * (3 * k * k - 12 * k + 11) + n * (k + 1) * (3 * k - 4)),
            ),
            (5, int(4 * k * (n - k * k)) / (km1.clone() * km1.clone())),
        ];
        for (i, v) in expect {
            if q.coeff(i) != v && w.is_none() {
                w = Some(format!("k={k} n={n} c{i}: got {}, printed {v}", q.coeff(i)));
            }
        }
        if k == 2 && q.coeff(3) != int(-2 * n * (n - 2)) && w.is_none() {
            w = Some(format!("k=2 n={n} c3"));
        }
    }
    checks.push(Check::from_witness(
        "closed forms c6, c1, c2, c5 and c3 at k=2",
        w,
        "exact comparison for every pair",
    ));

    let mut w = None;
    for k in 2..=k_max.max(2) {
        let km1 = int(k - 1);
        let mut spot = vec![
            (k * k, 3, int(-k * k * k * (9 * k - 16)) / km1.clone()),
            (k * k, 4, int(-5 * k * k * k) / km1.clone()),
        ];
        if k >= 3 {
            spot.push((k, 3, int(-k * k * (k - 2) * (2 * k - 3)) / km1.clone()));
            spot.push((k, 4, int(-5 * k * k * (k - 2)) / km1.clone()));
        }
        for (n, i, v) in spot {
            let q = build_q(k, n, &rat(1, k - 1))?;
            if q.coeff(i) != v && w.is_none() {
                w = Some(format!("k={k} n={n} c{i}: got {}, printed {v}", q.coeff(i)));
            }
        }
    }
    checks.push(Check::from_witness(
        "endpoint values c3|n=k, c3|n=k^2, c4|n=k, c4|n=k^2",
        w,
        "exact comparison",
    ));

    Ok(Report {
        title: format!("all coefficients nonpositive at alpha = 1/(k-1), k <= {k_max}"),
        checks,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct A3Options {
    pub n_sweep_max: i64,
    /// Rebuild the parametric sequence and compare with the fixtures.
    pub symbolic: bool,
    /// Upper end of the integer range used for sign agreement with the
    /// fixtures.
    pub agreement_max: i64,
}

impl Default for A3Options {
    fn default() -> Self {
        A3Options {
            n_sweep_max: 1000,
            symbolic: true,
            agreement_max: 200,
        }
    }
}

fn alpha_one_plus_seven_over_n() -> (RatFunc, RatFunc) {
    let n = RatFunc::param();
    let alpha = RatFunc::one() + RatFunc::from_i64(7) / n.clone();
    (n, alpha)
}

/// `Q(x, 1, n, 1 + 7/n)` with coefficients in `ℚ(n)`.
pub fn q_one_plus_seven_over_n() -> Poly<RatFunc> {
    let (n, alpha) = alpha_one_plus_seven_over_n();
    Poly::new(q_coefficients(&RatFunc::one(), &n, &alpha).to_vec())
}

/// `true` iff `r` is positive for every `n > a`.
fn positive_beyond_ratfunc(r: &RatFunc, a: &Rational) -> Result<bool, PinchingError> {
    let num = sign_beyond(r.num(), a)?;
    let den = sign_beyond(r.den(), a)?;
    Ok(num == Some(1) && den == Some(1))
}

/// The fixture checks, the `I₂` sub-sequence, the exact sweep, and (on
/// request) the symbolic reconstruction, for `c₀(n, 1) ≥ 1 + 7/n`.
pub fn verify_prop_a3(opts: &A3Options) -> Result<Report, PinchingError> {
    let twelve = int(12);
    let mut checks = Vec::new();
    let z = fixtures::z_terms();
    let i = fixtures::i_terms();

    // (i) fixtures have no real root above 12
    let mut w = None;
    for (name, terms) in [("Z", &z), ("I", &i)] {
        for (idx, p) in terms.iter().enumerate() {
            let ok = certify_no_roots_above(p, &twelve)?;
            if !ok && w.is_none() {
                w = Some(format!("{name}_{idx}"));
            }
        }
    }
    checks.push(Check::from_witness(
        "fixtures have no real root > 12",
        w,
        "exact Sturm count on (12, inf) for Z_0..Z_6 and I_0..I_6",
    ));

    let zs: Vec<i8> = z.iter().map(|p| p.sign_at(&Point::PosInf)).collect();
    let is: Vec<i8> = i.iter().map(|p| p.sign_at(&Point::PosInf)).collect();
    checks.push(Check::new(
        "fixture sign patterns at large n",
        zs == Z_SIGNS && is == I_SIGNS,
        format!("Z {zs:?}, I {is:?}"),
    ));
    let (s0, sinf) = (count_changes(&zs), count_changes(&is));
    checks.push(Check::new(
        "sigma(0) = sigma(inf) = 3",
        s0 == 3 && sinf == 3,
        format!("sigma(0)={s0}, sigma(inf)={sinf}"),
    ));

    // (ii) the I_2 sub-sequence
    let qs = fixtures::q_sequence();
    let at12: Vec<i8> = qs.iter().map(|p| p.sign_at(&Point::At(twelve.clone()))).collect();
    let atinf: Vec<i8> = qs.iter().map(|p| p.sign_at(&Point::PosInf)).collect();
    checks.push(Check::new(
        "I_2 sub-sequence signs",
        at12 == Q_SIGNS_AT_12 && atinf == Q_SIGNS_AT_INF,
        format!("at 12 {at12:?}, at inf {atinf:?}"),
    ));
    let (c12, cinf) = (count_changes(&at12), count_changes(&atinf));
    checks.push(Check::new(
        "sigma(12) = sigma(inf) = 1 for I_2",
        c12 == 1 && cinf == 1,
        format!("sigma(12)={c12}, sigma(inf)={cinf}"),
    ));
    let ours = SturmSeq::build(&fixtures::i2())?;
    let proportional = ours.len() == qs.len()
        && ours.polys().iter().zip(&qs).all(|(a, b)| positively_proportional(a, b));
    checks.push(Check::new(
        "I_2 sub-sequence equals the standard sequence up to positive scalars",
        proportional,
        format!("{} elements", ours.len()),
    ));

    // (iii) exact sweep
    let sweep: Vec<i64> = (13..=opts.n_sweep_max).collect();
    let bad: Vec<i64> = sweep
        .par_iter()
        .filter_map(|&n| {
            let q = build_q(1, n, &(int(1) + rat(7, n))).expect("valid range");
            (!nonpositive_on_positive_axis(&q)).then_some(n)
        })
        .collect();
    checks.push(Check::from_witness(
        "Q(x,1,n,1+7/n) < 0 on x > 0 (sweep)",
        bad.first().map(|n| format!("n={n}")),
        format!("13 <= n <= {}", opts.n_sweep_max),
    ));

    // small n handled directly
    let mut w = None;
    for n in 3..=12 {
        if !probe(1, n, &(int(1) + rat(7, n)))?.passed && w.is_none() {
            w = Some(format!("n={n}"));
        }
    }
    checks.push(Check::from_witness(
        "Q(x,1,n,1+7/n) < 0 on x > 0 for 3 <= n <= 12",
        w,
        "direct exact gate",
    ));

    if opts.symbolic {
        checks.extend(symbolic_a3(opts.agreement_max)?);
    }

    Ok(Report {
        title: "c0(n,1) >= 1 + 7/n".into(),
        checks,
    })
}

fn positively_proportional(a: &Poly<Rational>, b: &Poly<Rational>) -> bool {
    match (a.lead(), b.lead()) {
        (Some(la), Some(lb)) => {
            let r = la / lb;
            r.is_positive() && &b.scale(&r) == a
        }
        _ => false,
    }
}

fn symbolic_a3(agreement_max: i64) -> Result<Vec<Check>, PinchingError> {
    let twelve = int(12);
    let mut checks = Vec::new();
    let seq = ParamSturmSeq::build(&q_one_plus_seven_over_n(), &twelve)?;
    let zs = seq.zero_signs()?;
    let is = seq.lead_signs()?;
    checks.push(Check::new(
        "parametric sequence reproduces sign patterns",
        zs == Z_SIGNS && is == I_SIGNS,
        format!(
            "{} elements, {} removed factors; Z {zs:?}, I {is:?}",
            seq.polys().len(),
            seq.ledger().len()
        ),
    ));
    let (s0, sinf) = (seq.sigma_zero()?, seq.sigma_infinity()?);
    checks.push(Check::new(
        "parametric sigma(0) = sigma(inf) = 3",
        s0 == 3 && sinf == 3,
        format!("sigma(0)={s0}, sigma(inf)={sinf}"),
    ));

    let z = fixtures::z_terms();
    let i = fixtures::i_terms();
    let mut w = None;
    'outer: for n in 13..=agreement_max {
        let nv = int(n);
        for (name, ours, theirs) in [("Z", seq.zero_terms(), &z), ("I", seq.lead_terms(), &i)] {
            for (idx, (a, b)) in ours.iter().zip(theirs).enumerate() {
                if a.sign_at(&Point::At(nv.clone())) != b.sign_at(&Point::At(nv.clone())) {
                    w = Some(format!("{name}_{idx} at n={n}"));
                    break 'outer;
                }
            }
        }
    }
    checks.push(Check::from_witness(
        "extracted terms sign-agree with fixtures",
        w,
        format!("every integer 13 <= n <= {agreement_max}"),
    ));

    let mut w = None;
    for (name, ours, theirs) in [("Z", seq.zero_terms(), &z), ("I", seq.lead_terms(), &i)] {
        for (idx, (a, b)) in ours.iter().zip(theirs).enumerate() {
            let ratio = RatFunc::new(a.clone(), b.clone())?;
            if !positive_beyond_ratfunc(&ratio, &twelve)? && w.is_none() {
                w = Some(format!("{name}_{idx}"));
            }
        }
    }
    checks.push(Check::from_witness(
        "extracted / fixture is positive for n > 12",
        w,
        "numerator and denominator certified root-free above 12, positive at infinity",
    ));
    Ok(checks)
}

/// The substitution `α = 1/k + k/((k−1)n)` and the printed `aᵢ`.
pub fn verify_prop_a4(k_max: i64, n_max: i64) -> Result<Report, PinchingError> {
    let mut checks = Vec::new();
    let ks: Vec<i64> = (2..=k_max.max(2)).collect();

    // (i) identity, symbolic in n and at 20 probe values per k
    let mut w = None;
    for &k in &ks {
        let n = RatFunc::param();
        let kr = RatFunc::from_i64(k);
        let alpha = RatFunc::one() / kr.clone()
            + kr.clone() / (RatFunc::from_i64(k - 1) * n.clone());
        let scale = n.clone() * n.clone() * RatFunc::from_i64((k - 1) * (k - 1));
        let lhs = q_coefficients(&kr, &n, &alpha).map(|c| c * scale.clone());
        let printed = fixtures::a_coefficients(&kr, &n);
        if let Some(i) = (0..7).find(|&i| lhs[i] != printed[i]) {
            w.get_or_insert(format!("k={k} a_{i} (symbolic)"));
        }
        for j in 0..20 {
            let nv = k * k + 3 * j - 10;
            let nv = if nv < k.max(3) { k.max(3) + j } else { nv };
            let alpha = rat(1, k) + rat(k, (k - 1) * nv);
            let q = build_q(k, nv, &alpha)?.scale(&int(nv * nv * (k - 1) * (k - 1)));
            let a = fixtures::a_coefficients(&int(k), &int(nv));
            if let Some(i) = (0..7).find(|&i| q.coeff(i) != a[i]) {
                w.get_or_insert(format!("k={k} n={nv} a_{i}"));
            }
        }
    }
    checks.push(Check::from_witness(
        "n^2(k-1)^2 Q(x,k,n,1/k+k/((k-1)n)) = sum a_i x^i",
        w,
        format!("symbolic in n and 20 probes each, 2 <= k <= {k_max}"),
    ));

    // (ii) a0, a1, a6 and a2, a3, a4 negative for n >= k^2 + 1
    let mut w = None;
    for &k in &ks {
        let a = fixtures::a_in_n(k);
        let below = int(k * k) + rat(1, 2);
        for j in [0usize, 1, 2, 3, 4, 6] {
            if sign_beyond(&a[j], &below)? != Some(-1) {
                w.get_or_insert(format!("k={k} a_{j}"));
            }
        }
        for j in [2usize, 3, 4] {
            let start = int(k * k + 1);
            let ok = a[j].eval(&start).is_negative()
                && certify_no_roots_above(&a[j], &start)?
                && a[j].sign_at(&Point::PosInf) < 0;
            if !ok {
                w.get_or_insert(format!("k={k} a_{j} from n=k^2+1"));
            }
        }
    }
    checks.push(Check::from_witness(
        "a_0,a_1,a_2,a_3,a_4,a_6 < 0 for n >= k^2+1",
        w,
        "exact Sturm certification per k",
    ));

    let row = fixtures::a_on_first_row();
    let mut w = None;
    for j in [2usize, 3, 4] {
        let ok = row[j].eval(&int(2)).is_negative() && sign_beyond(&row[j], &int(2))? == Some(-1);
        if !ok {
            w.get_or_insert(format!("a_{j}(k, k^2+1)"));
        }
    }
    checks.push(Check::from_witness(
        "a_2,a_3,a_4 at n = k^2+1 negative for all k >= 2",
        w,
        "polynomials in k, exact Sturm certification",
    ));

    // (iii) a5 regimes
    let a2 = fixtures::a_in_n(2);
    let a3 = fixtures::a_in_n(3);
    checks.push(Check::new(
        "a_5 factorizations at k = 2, 3",
        Some(&a2[5]) == fixtures::a5_printed(2).as_ref()
            && Some(&a3[5]) == fixtures::a5_printed(3).as_ref(),
        "-2(n-4)(n-44) and -6(n-9)(5n-72)",
    ));
    let ok = sign_beyond(&a2[5], &int(44))? == Some(-1) && sign_beyond(&a3[5], &int(15))? == Some(-1);
    checks.push(Check::new(
        "a_5 < 0 for k=2, n>44 and k=3, n>15",
        ok,
        "exact",
    ));
    let mut w = None;
    {
        // (k²+1)L + 4k⁴+6k³−6k² = −(k(k−4)+2)(5k³−k²+3k−3) as polynomials in k
        let k = Poly::<Rational>::x();
        let l = Poly::from_i64s(&[6, -18, 17, -5]);
        let lhs = &(&(&k.pow(2) + &Poly::from_i64s(&[1])) * &l) + &Poly::from_i64s(&[0, 0, -6, 6, 4]);
        let rhs = -&(&Poly::from_i64s(&[2, -4, 1]) * &Poly::from_i64s(&[-3, 3, -1, 5]));
        if lhs != rhs {
            w = Some("chain identity".to_string());
        }
        // L < 0 and the bound is negative for k >= 4
        if sign_beyond(&l, &int(4))? != Some(-1) || l.eval(&int(4)) >= int(0) {
            w.get_or_insert("L(k) sign".into());
        }
        for &kk in ks.iter().filter(|&&kk| kk >= 4) {
            let a = fixtures::a_in_n(kk);
            for n in kk * kk + 1..=n_max.max(kk * kk + 1) {
                let v = a[5].eval(&int(n));
                let b = fixtures::a5_bound(kk, n);
                if v > b || !b.is_negative() {
                    w.get_or_insert(format!("k={kk} n={n}"));
                }
            }
            if sign_beyond(&a[5], &(int(kk * kk) + rat(1, 2)))? != Some(-1) {
                w.get_or_insert(format!("k={kk} a_5 Sturm"));
            }
        }
    }
    checks.push(Check::from_witness(
        "a_5 bound chain for k >= 4",
        w,
        format!("identity in k, plus a_5 <= bound < 0 for n <= {n_max}"),
    ));

    // the Sturm gate agrees wherever the coefficient route applies
    let mut w = None;
    for &k in &ks {
        let start = match k {
            2 => 45,
            3 => 16,
            _ => k * k + 1,
        };
        for n in start..=n_max.max(start) {
            if !probe(k, n, &(rat(1, k) + rat(k, (k - 1) * n)))?.passed {
                w.get_or_insert(format!("k={k} n={n}"));
            }
        }
    }
    checks.push(Check::from_witness(
        "Sturm gate at the bound in the coefficient regime",
        w,
        format!("n up to {n_max}"),
    ));

    // (iv) residual windows by direct gate and bisection
    let delta = rat(1, 100);
    let windows: Vec<(i64, i64)> = (4..=44)
        .map(|n| (2, n))
        .chain((9..=15).map(|n| (3, n)))
        .collect();
    let results: Vec<Option<String>> = windows
        .par_iter()
        .map(|&(k, n)| -> Result<Option<String>, PinchingError> {
            let bound = rat(1, k) + rat(k, (k - 1) * n);
            let gate = probe(k, n, &bound)?.passed;
            let b = c0_bisect(n, k, &delta)?;
            let consistent = b.c0_lo >= &bound - &delta;
            Ok((!(gate && consistent)).then(|| {
                format!("k={k} n={n} gate={gate} c0_lo={}", b.c0_lo)
            }))
        })
        .collect::<Result<_, _>>()?;
    checks.push(Check::from_witness(
        "residual windows k=2, 4<=n<=44 and k=3, 9<=n<=15",
        first(results),
        "exact gate at the bound, and bisection c0_lo within delta of it",
    ));

    Ok(Report {
        title: format!("c0(n,k) >= 1/k + k/((k-1)n) for n >= k^2, k <= {k_max}"),
        checks,
    })
}

/// `k((k−2)α−1)λ₁² − (kα(2k−n−2)+n)λ₁λ₂ − (n−k)(1+kα)λ₂²`.
pub fn claim1_expression<T: Field>(n: &T, k: &T, alpha: &T, l1: &T, l2: &T) -> T {
    let c = |v: i64| T::from_i64(v);
    let ka = k.clone() * alpha.clone();
    k.clone() * ((k.clone() - c(2)) * alpha.clone() - c(1)) * l1.clone() * l1.clone()
        - (ka.clone() * (c(2) * k.clone() - n.clone() - c(2)) + n.clone()) * l1.clone() * l2.clone()
        - (n.clone() - k.clone()) * (c(1) + ka) * l2.clone() * l2.clone()
}

/// Grid evaluation of the zero-order quadratic on `(10⁻³, 10³)²`, exact,
/// plus the discriminant identity at `c₂` on the square-root branch.
pub fn claim1_zero_order_check(
    n: i64,
    k: i64,
    alpha: &Rational,
    samples: usize,
) -> Result<Report, PinchingError> {
    let c2 = c2_closed_form(n, k)?;
    if alpha < &rat(1, k) || c2.cmp_rational(alpha) == std::cmp::Ordering::Less {
        return Err(PinchingError::AlphaOutOfRange {
            n,
            k,
            alpha: alpha.clone(),
        });
    }
    let samples = samples.max(2);
    let grid: Vec<Rational> = (0..samples)
        .map(|i| {
            let e = -3.0 + 6.0 * (i as f64 + 0.5) / samples as f64;
            Rational::from_float(10f64.powf(e)).expect("finite")
        })
        .collect();
    let (nr, kr) = (int(n), int(k));
    let mut w = None;
    for l1 in &grid {
        for l2 in &grid {
            let v = claim1_expression(&nr, &kr, alpha, l1, l2);
            if v.is_positive() {
                w.get_or_insert(format!(
                    "lambda=({}, {}) value {}",
                    crate::arith::to_f64(l1),
                    crate::arith::to_f64(l2),
                    crate::arith::to_f64(&v)
                ));
            }
        }
    }
    let mut checks = vec![Check::from_witness(
        "zero-order quadratic nonpositive on grid",
        w,
        format!("{samples}x{samples} log-spaced samples, exact"),
    )];
    if c2_uses_surd_branch(n, k) {
        let s = |v: i64| Surd::rational(int(v));
        let b = s(k) * c2.clone() * s(2 * k - n - 2) + s(n);
        let d = b.clone() * b + s(4 * (n - k) * k) * (s(1) + s(k) * c2.clone()) * (s(k - 2) * c2.clone() - s(1));
        checks.push(Check::new(
            "discriminant vanishes at c2",
            d.signum() == 0,
            format!("c2 = {c2}"),
        ));
    }
    Ok(Report {
        title: format!("zero-order terms, n={n} k={k} alpha={alpha}"),
        checks,
    })
}

/// `1/k ≤ c₀ ≤ 1/(k−1)` (bracket resolution δ) across a grid, and
/// `c₀ ≈ 1/(k−1)` whenever `n ≤ k²`.
pub fn verify_alpha_sandwich(
    n_max: i64,
    k_max: i64,
    delta: &Rational,
) -> Result<Report, PinchingError> {
    let pairs: Vec<(i64, i64)> = (3..=n_max)
        .flat_map(|n| (1..=k_max.min(n)).map(move |k| (n, k)))
        .collect();
    let results = pairs
        .par_iter()
        .map(|&(n, k)| c0_bisect(n, k, delta))
        .collect::<Result<Vec<_>, _>>()?;
    let mut lower = None;
    let mut upper = None;
    let mut endpoint = None;
    let mut certified = None;
    for r in &results {
        let (n, k) = (r.n, r.k);
        if r.c0_lo < rat(1, k) {
            lower.get_or_insert(format!("n={n} k={k} c0_lo={}", r.c0_lo));
        }
        let cap = if k == 1 { int(6) } else { rat(1, k - 1) + delta };
        if r.c0_hi > cap {
            upper.get_or_insert(format!("n={n} k={k} c0_hi={}", r.c0_hi));
        }
        if k >= 2 && n <= k * k && r.c0_lo < rat(1, k - 1) - delta {
            endpoint.get_or_insert(format!("n={n} k={k} c0_lo={}", r.c0_lo));
        }
        let q = build_q(k, n, &r.c0_lo)?;
        if !nonpositive_on_positive_axis(&q) {
            certified.get_or_insert(format!("n={n} k={k}"));
        }
    }
    let span = format!("3 <= n <= {n_max}, 1 <= k <= min(n, {k_max})");
    Ok(Report {
        title: format!("1/k <= c0(n,k) <= 1/(k-1), delta={delta}"),
        checks: vec![
            Check::from_witness("lower bound 1/k", lower, span.clone()),
            Check::from_witness("upper bound 1/(k-1)+delta (k>=2), 6 (k=1)", upper, span.clone()),
            Check::from_witness("c0 within delta of 1/(k-1) when n <= k^2", endpoint, span.clone()),
            Check::from_witness("Q(.,k,n,c0_lo) certified nonpositive", certified, span),
        ],
    })
}
