//! The polynomial `Q`, the pinching constants `c₀`, `c₂`, `c₁`, and exact
//! verification of the sign statements behind them.

mod bounds;
pub mod fixtures;
mod q;
mod verify;

pub use bounds::{
    bounds_table, c0_bisect, c1_combined, c2_closed_form, c2_uses_surd_branch, initial_bracket,
    probe, BoundsResult, Branch, Probe,
};
pub use q::{alpha_decomposition, build_q, q_at_reciprocal_k, q_coefficients, QDecomposition};
pub use verify::{
    claim1_expression, claim1_zero_order_check, q_one_plus_seven_over_n, verify_alpha_sandwich,
    verify_prop_a1,
    verify_prop_a3, verify_prop_a4, Check, Report, A3Options,
};

use crate::arith::{ArithError, Rational};
use crate::sturm::SturmError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PinchingError {
    #[error("parameters out of range: need n >= 3 and 1 <= k <= n, got n={n}, k={k}")]
    Range { n: i64, k: i64 },
    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(Rational),
    #[error("delta must be positive, got {0}")]
    NonPositiveDelta(Rational),
    #[error("Q(x,{k},{n},1/k) failed the nonpositivity gate")]
    InitialGateFailed { n: i64, k: i64 },
    #[error("alpha {alpha} outside [1/k, c2(n,k)] for n={n}, k={k}")]
    AlphaOutOfRange { n: i64, k: i64, alpha: Rational },
    #[error("positive sample {value} at lambda=({l1}, {l2})")]
    PositiveSample { l1: f64, l2: f64, value: f64 },
    #[error(transparent)]
    Sturm(#[from] SturmError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
