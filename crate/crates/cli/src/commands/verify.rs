use pinchlab::pinching::{
    claim1_zero_order_check, verify_alpha_sandwich, verify_prop_a1, verify_prop_a3,
    verify_prop_a4, A3Options, Report,
};
use serde_json::{json, Map, Value};

use super::{rational_arg, CliError, Context};
use crate::cli::{Prop, VerifyArgs};
use crate::output::{json_text, write_file, write_stdout};

fn label(p: Prop) -> &'static str {
    match p {
        Prop::A1 => "a1",
        Prop::A3 => "a3",
        Prop::A3Sweep => "a3-sweep",
        Prop::A4 => "a4",
        Prop::Claim1 => "claim1",
        Prop::Sandwich => "sandwich",
        Prop::All => "all",
    }
}

fn one(p: Prop, args: &VerifyArgs) -> Result<Report, CliError> {
    let a3 = |symbolic: bool| A3Options {
        n_sweep_max: args.n_sweep_max,
        symbolic,
        agreement_max: args.agreement_max,
    };
    Ok(match p {
        Prop::A1 => verify_prop_a1(args.k_max.unwrap_or(12))?,
        Prop::A3 => verify_prop_a3(&a3(true))?,
        Prop::A3Sweep => verify_prop_a3(&a3(false))?,
        Prop::A4 => verify_prop_a4(args.k_max.unwrap_or(8), args.n_max.unwrap_or(100))?,
        Prop::Claim1 => {
            let alpha = rational_arg("alpha", &args.alpha)?;
            claim1_zero_order_check(args.n, args.k, &alpha, args.samples)?
        }
        Prop::Sandwich => {
            let delta = rational_arg("delta", &args.delta)?;
            verify_alpha_sandwich(
                args.n_max.unwrap_or(12),
                args.k_max.unwrap_or(12),
                &delta,
            )?
        }
        Prop::All => unreachable!("expanded by the caller"),
    })
}

pub fn run(args: &VerifyArgs, ctx: &mut Context) -> Result<bool, CliError> {
    if args.n_sweep_max < 13 && matches!(args.prop, Prop::A3 | Prop::A3Sweep | Prop::All) {
        return Err(CliError::Usage("--n-sweep-max must be at least 13".into()));
    }
    let props: Vec<Prop> = match args.prop {
        Prop::All => vec![Prop::A1, Prop::A3, Prop::A4, Prop::Claim1, Prop::Sandwich],
        p => vec![p],
    };
    let mut reports = Vec::new();
    for p in props {
        let r = one(p, args)?;
        write_stdout(&r.to_string())?;
        reports.push((p, r));
    }
    let passed = reports.iter().all(|(_, r)| r.passed());
    let status = if passed { "PASS" } else { "FAIL" };
    write_stdout(&format!("{status}\n"))?;

    if let Some(path) = &args.out {
        let mut verdicts = Map::new();
        for (p, r) in &reports {
            for c in &r.checks {
                verdicts.insert(format!("{}: {}", label(*p), c.name), Value::Bool(c.passed));
            }
        }
        let results: Vec<Value> = reports
            .iter()
            .map(|(p, r)| json!({ "prop": label(*p), "report": r }))
            .collect();
        let manifest = ctx.finished().clone();
        write_file(path, &json_text(&manifest, Value::Array(results), Value::Object(verdicts)))?;
    }
    Ok(passed)
}
