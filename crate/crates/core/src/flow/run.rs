use super::curvature::field_of;
use super::metrics::{metrics_from, summarize, FieldSummary};
use super::{
    advance_by, estimate_extinction, fit_log_linear, rescale_series, stable_dt,
    sphere_extinction_time, FlowConfig, FlowError, FlowMetrics, FlowState, LogLinearFit,
    RescaledPoint,
};

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Snapshot {
    pub metrics: FlowMetrics,
    #[serde(skip)]
    pub theta: Vec<f64>,
    #[serde(skip)]
    pub u: Vec<f64>,
}

/// Worst per-step behavior of the monotone quantities over the whole run.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct StepMonitor {
    pub steps: u64,
    /// Largest `(G_new − G_old)/G_old` over all steps.
    pub g_max_rel_increase: f64,
    /// Largest `(σ_old − σ_new)/σ_old` for the minimum of `σ_k`.
    pub sigma_min_rel_decrease: f64,
    pub ratio_max_initial: f64,
    pub ratio_max_peak: f64,
    pub c31_initial: f64,
    pub c31_peak: f64,
}

impl StepMonitor {
    fn new(s: &FieldSummary) -> Self {
        StepMonitor {
            steps: 0,
            g_max_rel_increase: f64::NEG_INFINITY,
            sigma_min_rel_decrease: f64::NEG_INFINITY,
            ratio_max_initial: s.ratio_max,
            ratio_max_peak: s.ratio_max,
            c31_initial: s.c31,
            c31_peak: s.c31,
        }
    }

    fn update(&mut self, old: &FieldSummary, new: &FieldSummary) {
        self.steps += 1;
        let g_inc = if old.g_max > 0.0 {
            (new.g_max - old.g_max) / old.g_max
        } else if new.g_max > 0.0 {
            f64::INFINITY
        } else {
            0.0
        };
        self.g_max_rel_increase = self.g_max_rel_increase.max(g_inc);
        self.sigma_min_rel_decrease = self
            .sigma_min_rel_decrease
            .max((old.sigma_min - new.sigma_min) / old.sigma_min);
        self.ratio_max_peak = self.ratio_max_peak.max(new.ratio_max);
        self.c31_peak = self.c31_peak.max(new.c31);
    }
}

/// Pass/fail judgements on the monitored claims, with the numbers behind
/// them.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Verdicts {
    pub g_monotone: bool,
    pub sigma_min_monotone: bool,
    pub ratio_bounded: bool,
    pub c31_bounded: bool,
    /// `|ũ − 1|` decreasing over the trailing tenth of the τ range.
    pub rescaled_converging: bool,
    /// Log-linear fit of the rescaled curvature gap over the trailing half of
    /// the τ range.
    pub gap_fit: Option<LogLinearFit>,
    pub gap_decaying: bool,
}

pub const G_TOLERANCE: f64 = 1e-6;
pub const SIGMA_TOLERANCE: f64 = 1e-8;
pub const BOUND_SLACK: f64 = 2.0;
/// Round-off allowance when checking that `|ũ − 1|` does not increase.
pub const DEVIATION_NOISE: f64 = 1e-10;
pub const R2_THRESHOLD: f64 = 0.95;

impl Verdicts {
    fn judge(monitor: &StepMonitor, rescaled: &[RescaledPoint]) -> Self {
        let tau_start = rescaled.first().map_or(0.0, |p| p.tau);
        let tau_end = rescaled.last().map_or(0.0, |p| p.tau);
        let tail = |frac: f64| -> Vec<&RescaledPoint> {
            let cut = tau_end - frac * (tau_end - tau_start);
            rescaled.iter().filter(|p| p.tau >= cut).collect()
        };
        let last_tenth = tail(0.1);
        let rescaled_converging = last_tenth.len() >= 2
            && last_tenth
                .windows(2)
                .all(|w| w[1].deviation <= w[0].deviation + DEVIATION_NOISE);
        let half = tail(0.5);
        let xs: Vec<f64> = half.iter().map(|p| p.tau).collect();
        let ys: Vec<f64> = half.iter().map(|p| p.gap).collect();
        let gap_fit = fit_log_linear(&xs, &ys);
        Verdicts {
            g_monotone: monitor.g_max_rel_increase <= G_TOLERANCE,
            sigma_min_monotone: monitor.sigma_min_rel_decrease <= SIGMA_TOLERANCE,
            ratio_bounded: monitor.ratio_max_peak <= BOUND_SLACK * monitor.ratio_max_initial,
            c31_bounded: monitor.c31_peak <= BOUND_SLACK * monitor.c31_initial,
            rescaled_converging,
            gap_decaying: gap_fit.is_some_and(|f| f.slope < 0.0 && f.r2 > R2_THRESHOLD),
            gap_fit,
        }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RunResult {
    pub snapshots: Vec<Snapshot>,
    pub t_hat: f64,
    pub rescaled: Vec<RescaledPoint>,
    pub monitor: StepMonitor,
    pub verdicts: Verdicts,
    #[serde(skip)]
    pub final_state: FlowState,
}

/// Steps until `u_min` falls below the configured fraction of its initial
/// value, recording snapshots and the per-step monitors.
pub fn run_flow(config: &FlowConfig) -> Result<RunResult, FlowError> {
    let mut state = config.initial_state()?;
    let stop_at = config.stop.u_min_fraction * state.u_min();
    let floor = config.stop.dt_floor * sphere_extinction_time(config, state.u_max());
    let mut field = field_of(&state.u, &state.theta, config, 0.0)?;
    let mut summary = summarize(&field, config);
    let mut monitor = StepMonitor::new(&summary);
    let snap = |s: &FlowState, f: &super::CurvatureField| Snapshot {
        metrics: metrics_from(s, config, f),
        theta: s.theta.clone(),
        u: s.u.clone(),
    };
    let mut snapshots = vec![snap(&state, &field)];

    while state.u_min() >= stop_at && state.steps < config.stop.max_steps {
        let dt = stable_dt(&field, &state, config);
        if !(dt >= floor) {
            return Err(FlowError::DtUnderflow {
                dt,
                floor,
                t: state.t,
            });
        }
        let next = advance_by(&state, config, dt)?;
        let next_field = field_of(&next.u, &next.theta, config, next.t).map_err(|e| match e {
            FlowError::ConvexityLoss { node, theta, t, .. } => FlowError::ConvexityLoss {
                node,
                theta,
                t,
                last_state: Box::new(state.clone()),
            },
            other => other,
        })?;
        let next_summary = summarize(&next_field, config);
        monitor.update(&summary, &next_summary);
        state = next;
        field = next_field;
        summary = next_summary;
        if state.steps % config.snapshot_every == 0 {
            snapshots.push(snap(&state, &field));
        }
    }
    if snapshots.last().map(|s| s.metrics.t) != Some(state.t) {
        snapshots.push(snap(&state, &field));
    }

    let t_hat = estimate_extinction(&snapshots, config)?;
    let rescaled = rescale_series(&snapshots, t_hat, config)?;
    for (s, r) in snapshots.iter_mut().zip(&rescaled) {
        s.metrics.tau = r.tau;
    }
    let verdicts = Verdicts::judge(&monitor, &rescaled);
    Ok(RunResult {
        snapshots,
        t_hat,
        rescaled,
        monitor,
        verdicts,
        final_state: state,
    })
}
