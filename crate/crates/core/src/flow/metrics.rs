use super::extinction::distances_from_axis_point;
use super::{principal_curvatures, CurvatureField, FlowConfig, FlowError, FlowState, Space};

/// Diagnostics for one state.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct FlowMetrics {
    pub t: f64,
    /// Rescaled time, filled in once an extinction estimate exists.
    pub tau: f64,
    pub sigma_k_min: f64,
    pub sigma_k_max: f64,
    /// `max max(λ_mer/λ_rot, λ_rot/λ_mer)`
    pub ratio_max: f64,
    /// `max (n−1) σ_k^{2α} (1/λ_mer − 1/λ_rot)²`
    pub g_max: f64,
    /// `max (r + 1/r − 2) σ_k^{2(α−1/k)}` with `r = λ_mer/λ_rot`
    pub c31_monitor: f64,
    pub rho_inner: f64,
    pub rho_outer: f64,
    /// Axial coordinate of the centre of the smallest enclosing ball.
    pub outer_center: f64,
    pub u_min: f64,
    pub u_max: f64,
    /// `max |λ_mer − λ_rot|`
    pub lambda_gap: f64,
}

/// Pointwise extrema that do not need the radii search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct FieldSummary {
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub ratio_max: f64,
    pub g_max: f64,
    pub c31: f64,
    pub gap: f64,
}

pub(crate) fn summarize(field: &CurvatureField, config: &FlowConfig) -> FieldSummary {
    let a = config.alpha;
    let ek = 2.0 * (a - 1.0 / config.k as f64);
    let mut s = FieldSummary {
        sigma_min: f64::INFINITY,
        sigma_max: 0.0,
        ratio_max: 1.0,
        g_max: 0.0,
        c31: 0.0,
        gap: 0.0,
    };
    for j in 0..field.sigma_k.len() {
        let (lm, lr, sk) = (field.lambda_mer[j], field.lambda_rot[j], field.sigma_k[j]);
        let r = lm / lr;
        s.sigma_min = s.sigma_min.min(sk);
        s.sigma_max = s.sigma_max.max(sk);
        s.ratio_max = s.ratio_max.max(r.max(1.0 / r));
        let inv = 1.0 / lm - 1.0 / lr;
        s.g_max = s
            .g_max
            .max((config.n - 1) as f64 * sk.powf(2.0 * a) * inv * inv);
        s.c31 = s.c31.max((r + 1.0 / r - 2.0) * sk.powf(ek));
        s.gap = s.gap.max((lm - lr).abs());
    }
    s
}

fn golden_section(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if hi - lo <= 1e-13 * (1.0 + hi.abs().max(lo.abs())) {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

/// `(ρ_inner, ρ_outer, centre of the outer ball)` with centres restricted to
/// the symmetry axis, distances measured to the profile nodes.
pub fn radii(state: &FlowState, space: Space) -> (f64, f64, f64) {
    let m = state.u.len() - 1;
    let (lo, hi) = (-state.u[m], state.u[0]);
    let d = |s: f64| distances_from_axis_point(space, &state.theta, &state.u, s);
    let (c_out, outer) = golden_section(lo, hi, |s| d(s).into_iter().fold(0.0, f64::max));
    let (_, neg_inner) = golden_section(lo, hi, |s| {
        -d(s).into_iter().fold(f64::INFINITY, f64::min)
    });
    (-neg_inner, outer, c_out)
}

pub fn compute_metrics(state: &FlowState, config: &FlowConfig) -> Result<FlowMetrics, FlowError> {
    let field = principal_curvatures(state, config)?;
    Ok(metrics_from(state, config, &field))
}

pub(crate) fn metrics_from(state: &FlowState, config: &FlowConfig, field: &CurvatureField) -> FlowMetrics {
    let s = summarize(field, config);
    let (rho_inner, rho_outer, outer_center) = radii(state, config.space);
    FlowMetrics {
        t: state.t,
        tau: 0.0,
        sigma_k_min: s.sigma_min,
        sigma_k_max: s.sigma_max,
        ratio_max: s.ratio_max,
        g_max: s.g_max,
        c31_monitor: s.c31,
        rho_inner,
        rho_outer,
        outer_center,
        u_min: state.u_min(),
        u_max: state.u_max(),
        lambda_gap: s.gap,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::Profile;

    #[test]
    fn sphere_metrics() {
        let c = FlowConfig::new(Space::Euclidean, 3, 1, 1.0, Profile::Sphere { r0: 0.7 });
        let s = c.initial_state().unwrap();
        let m = compute_metrics(&s, &c).unwrap();
        assert_eq!(m.g_max, 0.0);
        assert_eq!(m.ratio_max, 1.0);
        assert!((m.rho_inner - 0.7).abs() < 1e-9 && (m.rho_outer - 0.7).abs() < 1e-9);
        assert!(m.rho_inner <= m.rho_outer + 1e-12);
    }

    #[test]
    fn geodesic_sphere_radii() {
        let c = FlowConfig::new(Space::Sphere, 3, 1, 1.0, Profile::Sphere { r0: 0.4 });
        let s = c.initial_state().unwrap();
        let m = compute_metrics(&s, &c).unwrap();
        assert!((m.rho_inner - 0.4).abs() < 1e-9 && (m.rho_outer - 0.4).abs() < 1e-9);
    }

    #[test]
    fn perturbed_radii_bracket_profile() {
        let c = FlowConfig::new(Space::Euclidean, 3, 1, 1.0, Profile::Perturbed { r0: 1.0, e: 0.05 });
        let s = c.initial_state().unwrap();
        let m = compute_metrics(&s, &c).unwrap();
        // prolate: u ranges over [0.975, 1.05] with centre at the origin
        assert!((m.rho_outer - 1.05).abs() < 1e-9);
        // node sampling overestimates the inner radius by O(Δθ²)
        assert!((m.rho_inner - 0.975).abs() < 1e-5, "{m:?}");
        assert!(m.outer_center.abs() < 1e-6);
        assert!(m.g_max > 0.0 && m.ratio_max > 1.0);
    }
}
