use super::{FlowConfig, FlowError, Snapshot, Space};
use std::f64::consts::FRAC_PI_2;

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
fn gauss_legendre(m: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=m {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// `∫₀^r tan^p(s) ds` for `0 ≤ r < π/2`, `p > 0`. Panels shrink
/// geometrically towards the origin, where the integrand behaves like `s^p`.
pub(crate) fn tan_power_integral(p: f64, r: f64) -> f64 {
    if r <= 0.0 {
        return 0.0;
    }
    let nodes = gauss_legendre(12);
    let f = |s: f64| s.tan().powf(p);
    let panel = |a: f64, b: f64| -> f64 {
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        nodes.iter().map(|(x, w)| w * f(mid + half * x)).sum::<f64>() * half
    };
    let mut edges: Vec<f64> = (1..=60).rev().map(|i| r * 0.5f64.powi(i)).collect();
    edges.insert(0, 0.0);
    let uniform = 16;
    edges.extend((1..=uniform).map(|i| r * (0.5 + 0.5 * i as f64 / uniform as f64)));
    edges.windows(2).map(|e| panel(e[0], e[1])).sum()
}

/// Time for a round sphere of radius `r` (geodesic radius on the sphere)
/// to shrink to a point.
pub fn sphere_extinction_time(config: &FlowConfig, r: f64) -> f64 {
    let ka = config.k as f64 * config.alpha;
    let c = config.binom_nk().powf(config.alpha);
    match config.space {
        Space::Euclidean => r.powf(ka + 1.0) / ((ka + 1.0) * c),
        Space::Sphere => tan_power_integral(ka, r) / c,
    }
}

/// Radius at time `t` of the round sphere that vanishes at `t_ext`.
pub fn sphere_radius(config: &FlowConfig, t: f64, t_ext: f64) -> f64 {
    let ka = config.k as f64 * config.alpha;
    let c = config.binom_nk().powf(config.alpha);
    let remaining = (t_ext - t).max(0.0);
    match config.space {
        Space::Euclidean => ((ka + 1.0) * c * remaining).powf(1.0 / (ka + 1.0)),
        Space::Sphere => {
            let (mut lo, mut hi) = (0.0, FRAC_PI_2 * (1.0 - 1e-12));
            if sphere_extinction_time(config, hi) <= remaining {
                return hi;
            }
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if sphere_extinction_time(config, mid) < remaining {
                    lo = mid;
                } else {
                    hi = mid;
                }
                if hi - lo <= 1e-15 * hi {
                    break;
                }
            }
            0.5 * (lo + hi)
        }
    }
}

/// `τ(t)` for the round solution vanishing at `t_ext`.
pub fn rescaled_time(config: &FlowConfig, t: f64, t_ext: f64) -> f64 {
    match config.space {
        Space::Euclidean => {
            let ka = config.k as f64 * config.alpha;
            -(1.0 - t / t_ext).ln() / ((ka + 1.0) * config.binom_nk().powf(config.alpha))
        }
        Space::Sphere => -sphere_radius(config, t, t_ext).ln(),
    }
}

fn window(snapshots: &[Snapshot], fraction: f64) -> Result<&[Snapshot], FlowError> {
    let len = ((snapshots.len() as f64 * fraction) as usize).max(10);
    if snapshots.len() < len {
        return Err(FlowError::TooFewSnapshots {
            needed: len,
            have: snapshots.len(),
        });
    }
    let w = &snapshots[snapshots.len() - len..];
    if w.windows(2).any(|p| p[1].metrics.u_min >= p[0].metrics.u_min) {
        return Err(FlowError::Instability);
    }
    Ok(w)
}

/// Extinction time estimate.
///
/// Euclidean: least-squares line through `(t, u_min^{kα+1})` over the trailing
/// `fit_window` fraction of snapshots (at least 10), exact on round spheres.
/// A short window keeps the early, still visibly non-round shapes out of the
/// fit. Sphere: `t + T_sphere(r)` at the final snapshot, with `r` the mean of
/// its inner and outer radii.
pub fn estimate_extinction(snapshots: &[Snapshot], config: &FlowConfig) -> Result<f64, FlowError> {
    let w = window(snapshots, config.fit_window)?;
    let ka = config.k as f64 * config.alpha;
    match config.space {
        Space::Euclidean => {
            let xs: Vec<f64> = w.iter().map(|s| s.metrics.t).collect();
            let ys: Vec<f64> = w.iter().map(|s| s.metrics.u_min.powf(ka + 1.0)).collect();
            let (a, b) = least_squares(&xs, &ys);
            Ok(-a / b)
        }
        Space::Sphere => {
            let m = &w[w.len() - 1].metrics;
            let r = 0.5 * (m.rho_inner + m.rho_outer);
            Ok(m.t + sphere_extinction_time(config, r))
        }
    }
}

/// Intercept and slope of the least-squares line.
pub(crate) fn least_squares(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let b = sxy / sxx;
    (my - b * mx, b)
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct LogLinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

/// Fit `ln y = intercept + slope·x`. Nonpositive `y` values are skipped.
pub fn fit_log_linear(xs: &[f64], ys: &[f64]) -> Option<LogLinearFit> {
    let (x, y): (Vec<f64>, Vec<f64>) = xs
        .iter()
        .zip(ys)
        .filter(|(_, y)| **y > 0.0)
        .map(|(x, y)| (*x, y.ln()))
        .unzip();
    if x.len() < 3 {
        return None;
    }
    let (a, b) = least_squares(&x, &y);
    let my = y.iter().sum::<f64>() / y.len() as f64;
    let ss_tot: f64 = y.iter().map(|v| (v - my) * (v - my)).sum();
    let ss_res: f64 = x.iter().zip(&y).map(|(x, v)| (v - a - b * x).powi(2)).sum();
    let r2 = if ss_tot > 0.0 { 1.0 - ss_res / ss_tot } else { 1.0 };
    Some(LogLinearFit {
        slope: b,
        intercept: a,
        r2,
    })
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RescaledPoint {
    pub t: f64,
    pub tau: f64,
    pub u_tilde_min: f64,
    pub u_tilde_max: f64,
    /// `max |ũ − 1|`
    pub deviation: f64,
    /// `max |λ_mer − λ_rot|` times the comparison radius.
    pub gap: f64,
}

/// Distances from the axis point at signed axial coordinate `s` to every
/// profile node (geodesic on the sphere).
pub(crate) fn distances_from_axis_point(space: Space, theta: &[f64], u: &[f64], s: f64) -> Vec<f64> {
    theta
        .iter()
        .zip(u)
        .map(|(th, r)| match space {
            Space::Euclidean => {
                let (x, y) = (r * th.cos() - s, r * th.sin());
                x.hypot(y)
            }
            Space::Sphere => {
                let c = r.cos() * s.cos() + r.sin() * th.cos() * s.sin();
                c.clamp(-1.0, 1.0).acos()
            }
        })
        .collect()
}

/// Rescaled profiles against the round solution vanishing at `t_hat`,
/// centred at the axis point that minimizes the outer radius of the last
/// snapshot.
pub fn rescale_series(
    snapshots: &[Snapshot],
    t_hat: f64,
    config: &FlowConfig,
) -> Result<Vec<RescaledPoint>, FlowError> {
    let last = snapshots.last().ok_or(FlowError::TooFewSnapshots { needed: 1, have: 0 })?;
    if !(t_hat > last.metrics.t) {
        return Err(FlowError::ExtinctionTooEarly {
            t_hat,
            t_last: last.metrics.t,
        });
    }
    let q = last.metrics.outer_center;
    Ok(snapshots
        .iter()
        .map(|s| {
            let t = s.metrics.t;
            let radius = sphere_radius(config, t, t_hat);
            let d = distances_from_axis_point(config.space, &s.theta, &s.u, q);
            let (lo, hi) = d.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            });
            let (lo, hi) = (lo / radius, hi / radius);
            RescaledPoint {
                t,
                tau: rescaled_time(config, t, t_hat),
                u_tilde_min: lo,
                u_tilde_max: hi,
                deviation: (1.0 - lo).abs().max((hi - 1.0).abs()),
                gap: s.metrics.lambda_gap * radius,
            }
        })
        .collect())
}
