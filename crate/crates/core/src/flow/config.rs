use super::{principal_curvatures, FlowError, FlowState};
use crate::arith::binomial;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    /// ℝ^{n+1}
    Euclidean,
    /// 𝕊^{n+1}
    Sphere,
}

impl Space {
    pub fn epsilon(self) -> u8 {
        match self {
            Space::Euclidean => 0,
            Space::Sphere => 1,
        }
    }

    /// `sin u` on the sphere, `u` in Euclidean space.
    pub fn sn(self, u: f64) -> f64 {
        match self {
            Space::Euclidean => u,
            Space::Sphere => u.sin(),
        }
    }

    /// `cos u` on the sphere, `1` in Euclidean space.
    pub fn cs(self, u: f64) -> f64 {
        match self {
            Space::Euclidean => 1.0,
            Space::Sphere => u.cos(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Profile {
    Sphere { r0: f64 },
    /// `u(θ) = r₀(1 + e·P₂(cos θ))`.
    Perturbed { r0: f64, e: f64 },
    /// Values at the `M + 1` grid nodes.
    Tabulated { u: Vec<f64> },
}

impl Profile {
    pub fn sample(&self, theta: &[f64]) -> Result<Vec<f64>, FlowError> {
        match self {
            Profile::Sphere { r0 } => Ok(vec![*r0; theta.len()]),
            Profile::Perturbed { r0, e } => Ok(theta
                .iter()
                .map(|t| {
                    let c = t.cos();
                    r0 * (1.0 + e * 0.5 * (3.0 * c * c - 1.0))
                })
                .collect()),
            Profile::Tabulated { u } => {
                if u.len() != theta.len() {
                    return Err(FlowError::InvalidConfig(format!(
                        "tabulated profile has {} values for {} nodes",
                        u.len(),
                        theta.len()
                    )));
                }
                Ok(u.clone())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct StopCriteria {
    /// Stop once `u_min` drops below this fraction of its initial value.
    pub u_min_fraction: f64,
    /// Smallest admissible step, relative to the initial time scale.
    pub dt_floor: f64,
    pub max_steps: u64,
}

impl Default for StopCriteria {
    fn default() -> Self {
        StopCriteria {
            u_min_fraction: 0.05,
            dt_floor: 1e-14,
            max_steps: 20_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct FlowConfig {
    pub space: Space,
    pub n: usize,
    pub k: usize,
    pub alpha: f64,
    pub profile: Profile,
    pub grid_points: usize,
    pub safety: f64,
    pub snapshot_every: u64,
    /// Fraction of trailing snapshots (at least 10) used by the Euclidean
    /// extinction fit.
    pub fit_window: f64,
    pub stop: StopCriteria,
}

impl FlowConfig {
    pub fn new(space: Space, n: usize, k: usize, alpha: f64, profile: Profile) -> Self {
        FlowConfig {
            space,
            n,
            k,
            alpha,
            profile,
            grid_points: 200,
            safety: 0.25,
            snapshot_every: 50,
            fit_window: 0.02,
            stop: StopCriteria::default(),
        }
    }

    /// `C(n, k)` as a float.
    pub fn binom_nk(&self) -> f64 {
        binomial(self.n as u64, self.k as u64) as f64
    }

    pub fn validate(&self) -> Result<(), FlowError> {
        let bad = |m: String| Err(FlowError::InvalidConfig(m));
        if self.n < 3 {
            return bad(format!("n must be at least 3, got {}", self.n));
        }
        if self.k < 1 || self.k > self.n {
            return bad(format!("k must lie in 1..={}, got {}", self.n, self.k));
        }
        if !(self.alpha.is_finite() && self.alpha > 0.0) {
            return bad(format!("alpha must be positive, got {}", self.alpha));
        }
        if self.grid_points < 4 {
            return bad(format!("grid needs at least 4 intervals, got {}", self.grid_points));
        }
        if !(self.safety > 0.0 && self.safety.is_finite()) {
            return bad(format!("safety factor must be positive, got {}", self.safety));
        }
        if !(self.stop.u_min_fraction > 0.0 && self.stop.u_min_fraction < 1.0) {
            return bad(format!(
                "stop fraction must lie in (0, 1), got {}",
                self.stop.u_min_fraction
            ));
        }
        if !(self.fit_window > 0.0 && self.fit_window <= 1.0) {
            return bad(format!("fit window must lie in (0, 1], got {}", self.fit_window));
        }
        if self.snapshot_every == 0 {
            return bad("snapshot cadence must be positive".into());
        }
        Ok(())
    }

    /// The starting state, after checking positivity, the hemisphere bound on
    /// the sphere, and strict convexity.
    pub fn initial_state(&self) -> Result<FlowState, FlowError> {
        self.validate()?;
        let m = self.grid_points;
        let theta: Vec<f64> = (0..=m).map(|j| j as f64 * PI / m as f64).collect();
        let u = self.profile.sample(&theta)?;
        if let Some(j) = u.iter().position(|&x| !(x > 0.0)) {
            return Err(FlowError::InvalidConfig(format!("u must be positive, node {j}")));
        }
        if self.space == Space::Sphere {
            if let Some(j) = u.iter().position(|&x| x >= PI / 2.0) {
                return Err(FlowError::InvalidConfig(format!(
                    "u must stay below pi/2 on the sphere, node {j}"
                )));
            }
        }
        let state = FlowState {
            theta,
            u,
            t: 0.0,
            steps: 0,
        };
        principal_curvatures(&state, self).map_err(|e| match e {
            FlowError::ConvexityLoss { node, .. } => FlowError::InvalidConfig(format!(
                "initial profile is not strictly convex at node {node}"
            )),
            other => other,
        })?;
        Ok(state)
    }
}
