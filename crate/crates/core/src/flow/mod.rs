//! Method-of-lines simulation of the σ_k^α contracting flow for convex,
//! axially symmetric hypersurfaces written as radial graphs over a sphere.

mod config;
mod curvature;
mod extinction;
mod metrics;
mod run;
mod step;

pub use config::{FlowConfig, Profile, Space, StopCriteria};
pub use curvature::{principal_curvatures, sigma_k, sigma_k_partials, CurvatureField};
pub use extinction::{
    estimate_extinction, fit_log_linear, rescale_series, sphere_extinction_time, sphere_radius,
    rescaled_time, LogLinearFit, RescaledPoint,
};
pub use metrics::{compute_metrics, radii, FlowMetrics};
pub use run::{
    run_flow, RunResult, Snapshot, StepMonitor, Verdicts, BOUND_SLACK, DEVIATION_NOISE, G_TOLERANCE,
    R2_THRESHOLD, SIGMA_TOLERANCE,
};
pub use step::{advance, advance_by, advance_to, flow_speed, stable_dt};

/// Uniform polar grid `θ_j = jπ/M`, `j = 0..=M`, with profile values `u_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowState {
    pub theta: Vec<f64>,
    pub u: Vec<f64>,
    pub t: f64,
    pub steps: u64,
}

impl FlowState {
    pub fn dtheta(&self) -> f64 {
        std::f64::consts::PI / (self.theta.len() - 1) as f64
    }

    pub fn u_min(&self) -> f64 {
        self.u.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn u_max(&self) -> f64 {
        self.u.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FlowError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("convexity lost at node {node} (theta={theta:.6}) at t={t:.9e}")]
    ConvexityLoss {
        node: usize,
        theta: f64,
        t: f64,
        last_state: Box<FlowState>,
    },
    #[error("time step {dt:e} fell below the floor {floor:e} at t={t:.9e}")]
    DtUnderflow { dt: f64, floor: f64, t: f64 },
    #[error("u_min is not decreasing over the fit window")]
    Instability,
    #[error("need at least {needed} snapshots, have {have}")]
    TooFewSnapshots { needed: usize, have: usize },
    #[error("extinction estimate {t_hat} does not exceed the last snapshot time {t_last}")]
    ExtinctionTooEarly { t_hat: f64, t_last: f64 },
}
