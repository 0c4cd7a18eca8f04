pub mod bounds;
pub mod flow;
pub mod sturm;
pub mod verify;

use pinchlab::arith::{parse_rational, Rational};
use pinchlab::pinching::PinchingError;
use pinchlab::sturm::SturmError;

use crate::manifest::RunManifest;

/// How a command ended when it did not simply report its checks.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or parameters: exit 2.
    Usage(String),
    /// A check or computation failed: exit 1.
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Failed(m) => write!(f, "failed: {m}"),
        }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Usage(format!("{e:#}"))
    }
}

impl From<PinchingError> for CliError {
    fn from(e: PinchingError) -> Self {
        match e {
            PinchingError::Range { .. }
            | PinchingError::NonPositiveAlpha(_)
            | PinchingError::NonPositiveDelta(_)
            | PinchingError::AlphaOutOfRange { .. } => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<SturmError> for CliError {
    fn from(e: SturmError) -> Self {
        match e {
            SturmError::ZeroPolynomial | SturmError::EndpointRoot(_) => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

/// Shared state handed to every command.
pub struct Context {
    pub manifest: RunManifest,
    pub reproducible: bool,
}

impl Context {
    /// Manifest with the finish time stamped.
    pub fn finished(&mut self) -> &RunManifest {
        self.manifest.finish(self.reproducible);
        &self.manifest
    }
}

pub fn rational_arg(name: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

/// `A..B`, `A..=B` or a single integer, inclusive.
pub fn parse_range(name: &str, s: &str) -> Result<std::ops::RangeInclusive<i64>, CliError> {
    let bad = || CliError::Usage(format!("--{name}: expected A..B, got '{s}'"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(CliError::Usage(format!("--{name}: empty range {s}")));
    }
    Ok(a..=b)
}
