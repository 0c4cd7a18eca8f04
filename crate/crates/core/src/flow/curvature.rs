use super::{FlowConfig, FlowError, FlowState, Space};
use crate::arith::binomial;

/// Principal curvatures of the axially symmetric hypersurface at each node.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureField {
    /// Along the meridian, multiplicity 1.
    pub lambda_mer: Vec<f64>,
    /// Around the axis, multiplicity `n − 1`.
    pub lambda_rot: Vec<f64>,
    pub v: Vec<f64>,
    pub sigma_k: Vec<f64>,
}

fn binom_f(n: usize, k: isize) -> f64 {
    if k < 0 {
        0.0
    } else {
        binomial(n as u64, k as u64) as f64
    }
}

/// `σ_k` of the multiset `{λ_mer, λ_rot × (n−1)}`.
pub fn sigma_k(n: usize, k: usize, lm: f64, lr: f64) -> f64 {
    let k = k as isize;
    binom_f(n - 1, k - 1) * lm * lr.powi(k as i32 - 1) + binom_f(n - 1, k) * lr.powi(k as i32)
}

/// `(∂σ_k/∂λ_mer, ∂σ_k/∂λ_i)` where `λ_i` is one of the `n − 1` rotational
/// entries.
pub fn sigma_k_partials(n: usize, k: usize, lm: f64, lr: f64) -> (f64, f64) {
    let ki = k as isize;
    let d_mer = binom_f(n - 1, ki - 1) * lr.powi(ki as i32 - 1);
    let d_rot = binom_f(n - 2, ki - 2) * lm * pow_or_zero(lr, ki - 2)
        + binom_f(n - 2, ki - 1) * lr.powi(ki as i32 - 1);
    (d_mer, d_rot)
}

fn pow_or_zero(x: f64, e: isize) -> f64 {
    if e < 0 {
        0.0
    } else {
        x.powi(e as i32)
    }
}

/// Curvature data at one node from `u`, `u_θ`, `u_θθ` and `cot θ` (or
/// `None` at a pole).
#[inline]
pub(crate) fn node_curvatures(
    space: Space,
    u: f64,
    du: f64,
    d2u: f64,
    cot: Option<f64>,
) -> (f64, f64, f64) {
    let sn = space.sn(u);
    let cs = space.cs(u);
    let phi1 = du / sn;
    let phi2 = d2u / sn - du * du * cs / (sn * sn);
    let v2 = 1.0 + phi1 * phi1;
    let v = v2.sqrt();
    let lm = (-phi2 / v2 + cs) / (v * sn);
    // cot θ·φ_θ tends to φ_θθ at the poles
    let rot_term = match cot {
        Some(c) => c * phi1,
        None => phi2,
    };
    let lr = (-rot_term + cs) / (v * sn);
    (lm, lr, v)
}

/// Central differences with mirror ghosts `u_{-1} = u_1`, `u_{M+1} = u_{M-1}`.
#[inline]
pub(crate) fn derivatives(u: &[f64], j: usize, h: f64) -> (f64, f64) {
    let m = u.len() - 1;
    let left = if j == 0 { u[1] } else { u[j - 1] };
    let right = if j == m { u[m - 1] } else { u[j + 1] };
    ((right - left) / (2.0 * h), (right - 2.0 * u[j] + left) / (h * h))
}

pub(crate) fn field_of(
    u: &[f64],
    theta: &[f64],
    config: &FlowConfig,
    t: f64,
) -> Result<CurvatureField, FlowError> {
    let m = u.len() - 1;
    let h = std::f64::consts::PI / m as f64;
    let mut f = CurvatureField {
        lambda_mer: Vec::with_capacity(m + 1),
        lambda_rot: Vec::with_capacity(m + 1),
        v: Vec::with_capacity(m + 1),
        sigma_k: Vec::with_capacity(m + 1),
    };
    for j in 0..=m {
        let (du, d2u) = derivatives(u, j, h);
        let cot = if j == 0 || j == m {
            None
        } else {
            Some(1.0 / theta[j].tan())
        };
        let (lm, lr, v) = node_curvatures(config.space, u[j], du, d2u, cot);
        if !(lm > 0.0 && lr > 0.0) || !u[j].is_finite() {
            return Err(FlowError::ConvexityLoss {
                node: j,
                theta: theta[j],
                t,
                last_state: Box::new(FlowState {
                    theta: theta.to_vec(),
                    u: u.to_vec(),
                    t,
                    steps: 0,
                }),
            });
        }
        f.lambda_mer.push(lm);
        f.lambda_rot.push(lr);
        f.v.push(v);
        f.sigma_k.push(sigma_k(config.n, config.k, lm, lr));
    }
    Ok(f)
}

/// Principal curvatures by second-order finite differences.
pub fn principal_curvatures(
    state: &FlowState,
    config: &FlowConfig,
) -> Result<CurvatureField, FlowError> {
    field_of(&state.u, &state.theta, config, state.t).map_err(|e| match e {
        FlowError::ConvexityLoss {
            node, theta, t, ..
        } => FlowError::ConvexityLoss {
            node,
            theta,
            t,
            last_state: Box::new(state.clone()),
        },
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::{Profile, Space};
    use std::f64::consts::PI;

    fn cfg(space: Space, profile: Profile) -> FlowConfig {
        FlowConfig::new(space, 3, 1, 1.0, profile)
    }

    #[test]
    fn geodesic_sphere() {
        let c = cfg(Space::Sphere, Profile::Sphere { r0: PI / 6.0 });
        let s = c.initial_state().unwrap();
        let f = principal_curvatures(&s, &c).unwrap();
        let want = 3f64.sqrt();
        for j in 0..s.u.len() {
            assert!((f.lambda_mer[j] - want).abs() < 1e-12 * want);
            assert!((f.lambda_rot[j] - want).abs() < 1e-12 * want);
        }
    }

    #[test]
    fn euclidean_sphere() {
        let c = cfg(Space::Euclidean, Profile::Sphere { r0: 2.0 });
        let s = c.initial_state().unwrap();
        let f = principal_curvatures(&s, &c).unwrap();
        assert!(f.lambda_mer.iter().chain(&f.lambda_rot).all(|&l| l == 0.5));
        assert!(f.sigma_k.iter().all(|&s| (s - 1.5).abs() < 1e-15));
    }

    #[test]
    fn sigma_values() {
        // n=3, k=2, all curvatures 1: σ_2 = 3
        assert_eq!(sigma_k(3, 2, 1.0, 1.0), 3.0);
        assert_eq!(sigma_k(3, 3, 2.0, 3.0), 18.0);
        let (dm, dr) = sigma_k_partials(3, 2, 1.0, 1.0);
        assert_eq!((dm, dr), (2.0, 2.0));
        let (dm, dr) = sigma_k_partials(3, 1, 5.0, 7.0);
        assert_eq!((dm, dr), (1.0, 1.0));
    }

    #[test]
    fn partials_match_finite_differences() {
        let (n, k, lm, lr) = (5, 3, 1.3, 0.7);
        let (dm, dr) = sigma_k_partials(n, k, lm, lr);
        let h = 1e-6;
        let fd_m = (sigma_k(n, k, lm + h, lr) - sigma_k(n, k, lm - h, lr)) / (2.0 * h);
        // moving all n−1 rotational entries together gives (n−1)·∂σ/∂λ_i
        let fd_r = (sigma_k(n, k, lm, lr + h) - sigma_k(n, k, lm, lr - h)) / (2.0 * h);
        assert!((fd_m - dm).abs() < 1e-6);
        assert!((fd_r - (n - 1) as f64 * dr).abs() < 1e-6);
    }

    #[test]
    fn concave_profile_rejected() {
        let c = cfg(Space::Euclidean, Profile::Perturbed { r0: 1.0, e: 0.9 });
        assert!(matches!(c.initial_state(), Err(FlowError::InvalidConfig(_))));
    }
}
