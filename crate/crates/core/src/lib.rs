//! Exact certification of the pinching constants for σ_k^α contracting
//! curvature flows, and a numerical simulator for the axially symmetric flow.

pub mod arith;
pub mod flow;
pub mod pinching;
pub mod sturm;
