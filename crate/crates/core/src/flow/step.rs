use super::curvature::field_of;
use super::{
    principal_curvatures, sigma_k_partials, sphere_extinction_time, CurvatureField, FlowConfig,
    FlowError, FlowState,
};

fn rate_from(field: &CurvatureField, alpha: f64) -> Vec<f64> {
    field
        .sigma_k
        .iter()
        .zip(&field.v)
        .map(|(s, v)| -s.powf(alpha) * v)
        .collect()
}

/// `∂u/∂t = −σ_k^α v` at every node.
pub fn flow_speed(state: &FlowState, config: &FlowConfig) -> Result<Vec<f64>, FlowError> {
    Ok(rate_from(&principal_curvatures(state, config)?, config.alpha))
}

/// `safety · Δθ² / max D` with `D` the coefficient of the highest
/// derivative in the linearized speed:
/// `α σ_k^{α−1} sn⁻² (∂σ_k/∂λ_mer · v⁻² + (n−1) ∂σ_k/∂λ_rot)`.
/// The rotational part only involves `u_θθ` at the poles, but near them
/// `cot θ·u_θ` behaves like `u_θθ`, so it is kept everywhere as a bound.
pub fn stable_dt(field: &CurvatureField, state: &FlowState, config: &FlowConfig) -> f64 {
    let h = state.dtheta();
    let mut d_max = 0.0f64;
    for j in 0..state.u.len() {
        let (lm, lr, v, s) = (
            field.lambda_mer[j],
            field.lambda_rot[j],
            field.v[j],
            field.sigma_k[j],
        );
        let (dm, dr) = sigma_k_partials(config.n, config.k, lm, lr);
        let sn = config.space.sn(state.u[j]);
        let d = config.alpha * s.powf(config.alpha - 1.0) / (sn * sn)
            * (dm / (v * v) + (config.n - 1) as f64 * dr);
        d_max = d_max.max(d);
    }
    config.safety * h * h / d_max
}

/// One classical RK4 step of size `dt`.
pub fn advance_by(state: &FlowState, config: &FlowConfig, dt: f64) -> Result<FlowState, FlowError> {
    let (u, theta) = (&state.u, &state.theta);
    let rate = |w: &[f64], t: f64| -> Result<Vec<f64>, FlowError> {
        field_of(w, theta, config, t).map(|f| rate_from(&f, config.alpha))
    };
    let axpy = |a: f64, x: &[f64]| -> Vec<f64> { u.iter().zip(x).map(|(ui, xi)| ui + a * xi).collect() };
    let wrap = |e: FlowError| match e {
        FlowError::ConvexityLoss { node, theta, t, .. } => FlowError::ConvexityLoss {
            node,
            theta,
            t,
            last_state: Box::new(state.clone()),
        },
        other => other,
    };
    let t = state.t;
    let k1 = rate(u, t).map_err(wrap)?;
    let k2 = rate(&axpy(0.5 * dt, &k1), t + 0.5 * dt).map_err(wrap)?;
    let k3 = rate(&axpy(0.5 * dt, &k2), t + 0.5 * dt).map_err(wrap)?;
    let k4 = rate(&axpy(dt, &k3), t + dt).map_err(wrap)?;
    let next: Vec<f64> = (0..u.len())
        .map(|j| u[j] + dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]))
        .collect();
    Ok(FlowState {
        theta: state.theta.clone(),
        u: next,
        t: state.t + dt,
        steps: state.steps + 1,
    })
}

/// One RK4 step with the parabolic step-size bound.
pub fn advance(state: &FlowState, config: &FlowConfig) -> Result<FlowState, FlowError> {
    let field = principal_curvatures(state, config)?;
    let dt = stable_dt(&field, state, config);
    let floor = config.stop.dt_floor * sphere_extinction_time(config, state.u_max());
    if !(dt >= floor) {
        return Err(FlowError::DtUnderflow {
            dt,
            floor,
            t: state.t,
        });
    }
    advance_by(state, config, dt)
}

/// Steps with the parabolic bound and lands exactly on `t_end`.
pub fn advance_to(state: &FlowState, config: &FlowConfig, t_end: f64) -> Result<FlowState, FlowError> {
    let mut s = state.clone();
    while s.t < t_end {
        let field = principal_curvatures(&s, config)?;
        let dt = stable_dt(&field, &s, config).min(t_end - s.t);
        s = advance_by(&s, config, dt)?;
    }
    s.t = t_end;
    Ok(s)
}
