use pinchlab::arith::{Point, Poly, Rational};
use pinchlab::sturm::{count_changes, count_roots_in, Interval, SturmSeq};
use serde_json::json;

use super::{rational_arg, CliError, Context};
use crate::cli::SturmArgs;
use crate::output::{json_text, write_file, write_stdout};

/// `0,inf` or `a,inf`.
pub fn parse_interval(s: &str) -> Result<Interval, CliError> {
    let bad = || CliError::Usage(format!("--interval '{s}': expected 0,inf or a,inf"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    if !matches!(b.trim(), "inf" | "+inf") {
        return Err(bad());
    }
    let a = a.trim();
    if a == "0" {
        return Ok(Interval::PositiveAxis);
    }
    Ok(Interval::Above(rational_arg("interval", a)?))
}

fn sign_char(s: i8) -> char {
    match s {
        1 => '+',
        -1 => '-',
        _ => '0',
    }
}

fn signs_text(signs: &[i8]) -> String {
    signs.iter().map(|&s| sign_char(s)).collect()
}

pub fn run(args: &SturmArgs, ctx: &mut Context) -> Result<bool, CliError> {
    let coeffs: Vec<Rational> = args
        .coeffs
        .split(',')
        .map(|c| rational_arg("coeffs", c.trim()))
        .collect::<Result<_, _>>()?;
    let p = Poly::from_rationals(coeffs);
    if p.is_zero() {
        return Err(CliError::Usage("--coeffs: the zero polynomial has no root count".into()));
    }
    let interval = parse_interval(&args.interval)?;
    let (left, interval_text) = match &interval {
        Interval::PositiveAxis => (Point::ZeroPlus, "(0, inf)".to_string()),
        Interval::Above(a) => (Point::At(a.clone()), format!("({a}, inf)")),
    };
    let count = count_roots_in(&p, &interval)?;
    let (m, q) = p.deflate_zero_root().map_err(|e| CliError::Failed(e.to_string()))?;

    let mut report = format!("p(x) = {p}\ninterval {interval_text}\n");
    if m > 0 {
        report.push_str(&format!("deflated x^{m}: root at 0 of multiplicity {m} removed\n"));
    }
    let (len, left_signs, right_signs) = if q.degree().unwrap_or(0) == 0 {
        let s = q.sign_at(&Point::PosInf);
        (1, vec![s], vec![s])
    } else {
        let seq = SturmSeq::build(&q)?;
        (seq.len(), seq.signs_at(&left), seq.signs_at(&Point::PosInf))
    };
    report.push_str(&format!("sequence length {len}\n"));
    report.push_str(&format!(
        "signs at {left}: {}  ({} changes)\n",
        signs_text(&left_signs),
        count_changes(&left_signs)
    ));
    report.push_str(&format!(
        "signs at +inf: {}  ({} changes)\n",
        signs_text(&right_signs),
        count_changes(&right_signs)
    ));
    report.push_str(&format!("distinct real roots in {interval_text}: {count}\n"));
    write_stdout(&report)?;

    if let Some(path) = &args.out {
        let results = json!({
            "polynomial": p.to_string(),
            "coefficients": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "interval": interval_text,
            "deflated_multiplicity": m,
            "sequence_length": len,
            "signs_left": signs_text(&left_signs),
            "signs_right": signs_text(&right_signs),
            "roots": count,
        });
        let manifest = ctx.finished().clone();
        write_file(path, &json_text(&manifest, results, json!({ "counted": true })))?;
    }
    Ok(true)
}
