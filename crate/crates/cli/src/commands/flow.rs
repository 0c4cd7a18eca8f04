use num_traits::Signed;
use pinchlab::arith::{rat, to_f64, Rational, Surd};
use pinchlab::flow::{run_flow, FlowConfig, FlowError, FlowState, Profile, RunResult, Space};
use pinchlab::pinching::{c0_bisect, c2_closed_form};
use serde_json::{json, Value};

use super::{rational_arg, CliError, Context};
use crate::cli::{FlowArgs, SpaceArg};
use crate::output::{companion_json, csv_text, json_text, sig12, write_file, write_stdout};

pub const HEADER: [&str; 11] = [
    "t",
    "tau",
    "u_min",
    "u_max",
    "sigma_k_min",
    "sigma_k_max",
    "ratio_max",
    "G_max",
    "C31_monitor",
    "rho_inner",
    "rho_outer",
];

/// `sphere:r0=R` or `perturbed:r0=R,e=E`.
pub fn parse_profile(s: &str) -> Result<Profile, CliError> {
    let bad = |why: &str| CliError::Usage(format!("--profile '{s}': {why}"));
    let (kind, rest) = s.split_once(':').ok_or_else(|| bad("expected KIND:key=value,..."))?;
    let mut r0 = None;
    let mut e = None;
    for pair in rest.split(',').filter(|p| !p.trim().is_empty()) {
        let (key, value) = pair.split_once('=').ok_or_else(|| bad("expected key=value"))?;
        let v: f64 = value.trim().parse().map_err(|_| bad("not a number"))?;
        if !v.is_finite() {
            return Err(bad("not a finite number"));
        }
        match key.trim() {
            "r0" => r0 = Some(v),
            "e" => e = Some(v),
            other => return Err(bad(&format!("unknown key '{other}'"))),
        }
    }
    let r0 = r0.ok_or_else(|| bad("missing r0"))?;
    match (kind.trim(), e) {
        ("sphere", None) => Ok(Profile::Sphere { r0 }),
        ("sphere", Some(_)) => Err(bad("sphere takes only r0")),
        ("perturbed", Some(e)) => Ok(Profile::Perturbed { r0, e }),
        ("perturbed", None) => Err(bad("missing e")),
        _ => Err(bad("kind must be sphere or perturbed")),
    }
}

/// Where α sits relative to the certified range `[1/k, c_ε(n,k)]`.
#[derive(Debug, Clone)]
pub struct Admissibility {
    pub admissible: bool,
    /// Certified lower end of the `c₀` bracket, when `(n, k)` is in range.
    pub c0_lo: Option<Rational>,
    /// `c₂(n, k)` on the sphere.
    pub c2: Option<Surd>,
    pub reason: String,
}

impl Admissibility {
    fn to_json(&self) -> Value {
        json!({
            "admissible": self.admissible,
            "c0_lo": self.c0_lo.as_ref().map(|c| c.to_string()),
            "c2": self.c2.as_ref().map(|c| json!({ "value": c.to_f64(), "exact": c.to_string() })),
            "reason": self.reason,
        })
    }
}

pub fn admissibility(
    space: Space,
    n: usize,
    k: usize,
    alpha: &Rational,
    delta: &Rational,
) -> Result<Admissibility, CliError> {
    let out = |admissible, c0_lo, c2, reason: String| Admissibility { admissible, c0_lo, c2, reason };
    if n < 3 || k < 1 || k > n {
        return Ok(out(false, None, None, format!("no certified bound for n={n}, k={k}")));
    }
    if space == Space::Euclidean && k == n {
        return Ok(out(false, None, None, "k = n is not covered in Euclidean space".into()));
    }
    let (ni, ki) = (n as i64, k as i64);
    let c0_lo = c0_bisect(ni, ki, delta)?.c0_lo;
    let c2 = match space {
        Space::Sphere => Some(c2_closed_form(ni, ki)?),
        Space::Euclidean => None,
    };
    let low = rat(1, ki);
    if alpha < &low {
        return Ok(out(false, Some(c0_lo), c2, format!("alpha {alpha} below 1/k")));
    }
    if alpha > &c0_lo {
        let reason = format!("alpha {alpha} above the certified c0 {c0_lo}");
        return Ok(out(false, Some(c0_lo), c2, reason));
    }
    if let Some(c2v) = &c2 {
        if c2v.cmp_rational(alpha) == std::cmp::Ordering::Less {
            let reason = format!("alpha {alpha} above c2 = {}", sig12(c2v.to_f64()));
            return Ok(out(false, Some(c0_lo), c2, reason));
        }
    }
    Ok(out(true, Some(c0_lo), c2, "alpha within the certified range".into()))
}

fn snapshot_rows(r: &RunResult) -> Vec<Vec<String>> {
    r.snapshots
        .iter()
        .map(|s| {
            let m = &s.metrics;
            [
                m.t,
                m.tau,
                m.u_min,
                m.u_max,
                m.sigma_k_min,
                m.sigma_k_max,
                m.ratio_max,
                m.g_max,
                m.c31_monitor,
                m.rho_inner,
                m.rho_outer,
            ]
            .iter()
            .map(|&x| sig12(x))
            .collect()
        })
        .collect()
}

fn state_csv(ctx: &mut Context, state: &FlowState) -> String {
    let rows: Vec<Vec<String>> = state
        .theta
        .iter()
        .zip(&state.u)
        .map(|(t, u)| vec![sig12(*t), sig12(*u)])
        .collect();
    let manifest = ctx.finished().clone();
    let mut s = csv_text(&manifest, &["theta", "u"], &rows);
    s.push_str(&format!("# t = {}, steps = {}\n", sig12(state.t), state.steps));
    s
}

fn flow_failure(e: FlowError, args: &FlowArgs, ctx: &mut Context) -> Result<CliError, CliError> {
    match e {
        FlowError::InvalidConfig(m) => Ok(CliError::Usage(m)),
        FlowError::ConvexityLoss { ref last_state, .. } => {
            let dump = state_csv(ctx, last_state);
            match &args.out {
                Some(path) => {
                    let p = path.with_extension("last_state.csv");
                    write_file(&p, &dump)?;
                    eprintln!("last valid state written to {}", p.display());
                }
                None => eprint!("{dump}"),
            }
            Ok(CliError::Failed(e.to_string()))
        }
        other => Ok(CliError::Failed(other.to_string())),
    }
}

pub fn run(args: &FlowArgs, ctx: &mut Context) -> Result<bool, CliError> {
    let alpha_q = rational_arg("alpha", &args.alpha)?;
    if !alpha_q.is_positive() {
        return Err(CliError::Usage("--alpha must be positive".into()));
    }
    let delta = rational_arg("delta", &args.delta)?;
    if !delta.is_positive() {
        return Err(CliError::Usage("--delta must be positive".into()));
    }
    let space = match args.space {
        SpaceArg::Euclidean => Space::Euclidean,
        SpaceArg::Sphere => Space::Sphere,
    };
    let profile = parse_profile(&args.profile)?;

    let adm = admissibility(space, args.n, args.k, &alpha_q, &delta)?;
    if !adm.admissible {
        if args.strict {
            return Err(CliError::Usage(format!("inadmissible parameters: {}", adm.reason)));
        }
        eprintln!("warning: {}; claim verdicts are reported but not asserted", adm.reason);
    }

    let mut config = FlowConfig::new(space, args.n, args.k, to_f64(&alpha_q), profile);
    config.grid_points = args.grid;
    config.safety = args.safety;
    config.snapshot_every = args.snapshot_every;
    config.fit_window = args.fit_window;
    config.stop.u_min_fraction = args.stop_fraction;
    config.stop.max_steps = args.max_steps;

    let result = match run_flow(&config) {
        Ok(r) => r,
        Err(e) => return Err(flow_failure(e, args, ctx)?),
    };
    let v = &result.verdicts;
    let claims = [
        ("g_monotone", v.g_monotone),
        ("sigma_min_monotone", v.sigma_min_monotone),
        ("ratio_bounded", v.ratio_bounded),
        ("c31_bounded", v.c31_bounded),
    ];
    let claims_hold = claims.iter().all(|(_, ok)| *ok);

    let mut summary = format!(
        "T_hat = {}\nsteps = {}\nsnapshots = {}\nadmissible = {} ({})\n",
        sig12(result.t_hat),
        result.monitor.steps,
        result.snapshots.len(),
        adm.admissible,
        adm.reason
    );
    let pf = |ok: bool| if ok { "PASS" } else { "FAIL" };
    for (name, ok) in claims {
        summary.push_str(&format!("[{}] {name}\n", pf(ok)));
    }
    summary.push_str(&format!("[{}] rescaled_converging (diagnostic)\n", pf(v.rescaled_converging)));
    summary.push_str(&format!("[{}] gap_decaying (diagnostic)\n", pf(v.gap_decaying)));
    if let Some(f) = &v.gap_fit {
        summary.push_str(&format!("gap decay rate = {}, R2 = {}\n", sig12(-f.slope), sig12(f.r2)));
    }

    let manifest = ctx.finished().clone();
    let csv = csv_text(&manifest, &HEADER, &snapshot_rows(&result));
    match &args.out {
        Some(path) => {
            write_file(path, &csv)?;
            let rescaled: Vec<Value> = result
                .rescaled
                .iter()
                .map(|p| {
                    json!({
                        "t": p.t,
                        "tau": p.tau,
                        "u_tilde_min": p.u_tilde_min,
                        "u_tilde_max": p.u_tilde_max,
                        "deviation": p.deviation,
                        "gap": p.gap,
                    })
                })
                .collect();
            let results = json!({
                "T_hat": result.t_hat,
                "decay_rate": v.gap_fit.map(|f| -f.slope),
                "decay_r2": v.gap_fit.map(|f| f.r2),
                "steps": result.monitor.steps,
                "monitor": result.monitor,
                "admissibility": adm.to_json(),
                "rescaled": rescaled,
            });
            let verdicts = json!({
                "g_monotone": v.g_monotone,
                "sigma_min_monotone": v.sigma_min_monotone,
                "ratio_bounded": v.ratio_bounded,
                "c31_bounded": v.c31_bounded,
                "rescaled_converging": v.rescaled_converging,
                "gap_decaying": v.gap_decaying,
                "asserted": adm.admissible,
            });
            write_file(&companion_json(path), &json_text(&manifest, results, verdicts))?;
            write_stdout(&summary)?;
        }
        None => {
            write_stdout(&csv)?;
            eprint!("{summary}");
        }
    }
    Ok(!adm.admissible || claims_hold)
}
