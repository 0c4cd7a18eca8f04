use num_traits::Signed;
use pinchlab::arith::{int, rat, to_f64, Rational, Surd};
use pinchlab::pinching::{build_q, c1_combined, BoundsResult, Branch};
use pinchlab::sturm::nonpositive_on_positive_axis;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::time::Instant;

use super::{parse_range, rational_arg, CliError, Context};
use crate::cli::BoundsArgs;
use crate::output::{companion_json, csv_text, json_text, sig12, write_file, write_stdout};

pub const HEADER: [&str; 9] = [
    "n",
    "k",
    "c0_lo",
    "c0_hi",
    "c2",
    "c1",
    "active_branch",
    "iterations",
    "elapsed_ms",
];

/// Decimal value plus `[exact]` for rationals or `[surd]` for irrational
/// values given to twelve digits.
pub fn tagged(s: &Surd) -> String {
    let tag = if s.is_rational() { "exact" } else { "surd" };
    format!("{}[{tag}]", sig12(s.to_f64()))
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::C0 => "c0",
        Branch::C2 => "c2",
    }
}

fn surd_json(s: &Surd) -> Value {
    json!({ "value": s.to_f64(), "exact": s.to_string(), "rational": s.is_rational() })
}

fn row_json(r: &BoundsResult, elapsed_ms: u128) -> Value {
    let transcript: Vec<Value> = r
        .transcript
        .iter()
        .map(|p| {
            json!({
                "alpha": p.alpha.to_string(),
                "positive_roots": p.positive_roots,
                "passed": p.passed,
            })
        })
        .collect();
    json!({
        "n": r.n,
        "k": r.k,
        "c0_lo": r.c0_lo.to_string(),
        "c0_hi": r.c0_hi.to_string(),
        "c2": surd_json(&r.c2),
        "c1": surd_json(&r.c1),
        "active_branch": branch_name(r.active),
        "delta": r.delta.to_string(),
        "iterations": r.iterations,
        "elapsed_ms": elapsed_ms,
        "transcript": transcript,
    })
}

/// `1/k ≤ c0_lo`, `c0_hi ≤ 1/(k−1) + δ` (6 when k = 1) and an independent
/// exact gate at `c0_lo`; returns the first violation.
fn audit(r: &BoundsResult) -> Result<Option<String>, CliError> {
    let (n, k) = (r.n, r.k);
    if r.c0_lo < rat(1, k) {
        return Ok(Some(format!("n={n} k={k}: c0_lo {} below 1/k", r.c0_lo)));
    }
    let cap = if k == 1 { int(6) } else { rat(1, k - 1) + &r.delta };
    if r.c0_hi > cap {
        return Ok(Some(format!("n={n} k={k}: c0_hi {} above {cap}", r.c0_hi)));
    }
    if !nonpositive_on_positive_axis(&build_q(k, n, &r.c0_lo)?) {
        return Ok(Some(format!("n={n} k={k}: Q not certified at c0_lo {}", r.c0_lo)));
    }
    Ok(None)
}

pub fn run(args: &BoundsArgs, ctx: &mut Context) -> Result<bool, CliError> {
    let ns = parse_range("n-range", &args.n_range)?;
    let ks = parse_range("k-range", &args.k_range)?;
    let delta: Rational = rational_arg("delta", &args.delta)?;
    if !delta.is_positive() {
        return Err(CliError::Usage("--delta must be positive".into()));
    }
    if *ns.start() < 3 || *ks.start() < 1 {
        return Err(CliError::Usage("need n >= 3 and k >= 1".into()));
    }
    let pairs: Vec<(i64, i64)> = ns
        .flat_map(|n| ks.clone().filter(move |&k| k <= n).map(move |k| (n, k)))
        .collect();
    if pairs.is_empty() {
        return Err(CliError::Usage("no pairs with k <= n in the given ranges".into()));
    }

    let reproducible = ctx.reproducible;
    let rows: Vec<(BoundsResult, u128)> = pairs
        .par_iter()
        .map(|&(n, k)| {
            let t = Instant::now();
            let r = c1_combined(n, k, &delta)?;
            let ms = if reproducible { 0 } else { t.elapsed().as_millis() };
            Ok((r, ms))
        })
        .collect::<Result<_, CliError>>()?;

    let mut violations = Vec::new();
    for (r, _) in &rows {
        if let Some(v) = audit(r)? {
            violations.push(v);
        }
    }

    let csv_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|(r, ms)| {
            vec![
                r.n.to_string(),
                r.k.to_string(),
                sig12(to_f64(&r.c0_lo)),
                sig12(to_f64(&r.c0_hi)),
                tagged(&r.c2),
                tagged(&r.c1),
                branch_name(r.active).to_string(),
                r.iterations.to_string(),
                ms.to_string(),
            ]
        })
        .collect();
    let manifest = ctx.finished().clone();
    let csv = csv_text(&manifest, &HEADER, &csv_rows);
    match &args.out {
        Some(path) => {
            write_file(path, &csv)?;
            let results: Vec<Value> = rows.iter().map(|(r, ms)| row_json(r, *ms)).collect();
            let verdicts = json!({
                "certified": violations.is_empty(),
                "violations": violations,
            });
            write_file(&companion_json(path), &json_text(&manifest, Value::Array(results), verdicts))?;
            eprintln!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => write_stdout(&csv)?,
    }
    for v in &violations {
        eprintln!("certification failure: {v}");
    }
    Ok(violations.is_empty())
}
