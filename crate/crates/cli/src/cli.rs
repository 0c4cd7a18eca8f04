use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "pinchlab", version, about = "Pinching constants for sigma_k^alpha flows, certified exactly, and flow simulations")]
pub struct Cli {
    /// Flat key=value file (or a previous JSON output) supplying defaults for
    /// the subcommand's flags. Flags given on the command line win.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Fixed timestamps and zero elapsed times, for byte-identical output.
    #[arg(long, global = true)]
    pub reproducible: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bisect c0 and evaluate c2, c1 over a grid of (n, k).
    Bounds(BoundsArgs),
    /// Run the exact verification reports.
    Verify(VerifyArgs),
    /// Simulate the flow of an axially symmetric hypersurface.
    Flow(FlowArgs),
    /// Count real roots of a rational polynomial with a Sturm sequence.
    Sturm(SturmArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Bounds(_) => "bounds",
            Command::Verify(_) => "verify",
            Command::Flow(_) => "flow",
            Command::Sturm(_) => "sturm",
        }
    }
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Inclusive range of n, e.g. 3..12
    #[arg(long, value_name = "A..B")]
    pub n_range: String,
    /// Inclusive range of k; pairs with k > n are skipped
    #[arg(long, value_name = "A..B")]
    pub k_range: String,
    /// Bisection width, as a rational or decimal
    #[arg(long, default_value = "1/100")]
    pub delta: String,
    /// CSV destination; the JSON transcript goes next to it
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Prop {
    A1,
    A3,
    /// The n-sweep only, without the parametric sequence
    A3Sweep,
    A4,
    Claim1,
    Sandwich,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub prop: Prop,
    /// Largest k (defaults: 12 for a1 and sandwich, 8 for a4)
    #[arg(long)]
    pub k_max: Option<i64>,
    /// Largest n (defaults: 100 for a4, 12 for sandwich)
    #[arg(long)]
    pub n_max: Option<i64>,
    #[arg(long, default_value_t = 1000)]
    pub n_sweep_max: i64,
    /// Upper end of the fixture sign-agreement range
    #[arg(long, default_value_t = 200)]
    pub agreement_max: i64,
    #[arg(long, default_value_t = 3)]
    pub n: i64,
    #[arg(long, default_value_t = 1)]
    pub k: i64,
    #[arg(long, default_value = "1")]
    pub alpha: String,
    /// Grid size per axis for claim1
    #[arg(long, default_value_t = 40)]
    pub samples: usize,
    #[arg(long, default_value = "1/100")]
    pub delta: String,
    /// JSON destination
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Euclidean,
    Sphere,
}

#[derive(Debug, Args)]
pub struct FlowArgs {
    #[arg(long, value_enum)]
    pub space: SpaceArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Exponent, as a rational or decimal
    #[arg(long)]
    pub alpha: String,
    /// sphere:r0=R or perturbed:r0=R,e=E
    #[arg(long)]
    pub profile: String,
    #[arg(long, default_value_t = 200)]
    pub grid: usize,
    #[arg(long, default_value_t = 0.25)]
    pub safety: f64,
    #[arg(long, default_value_t = 50)]
    pub snapshot_every: u64,
    /// Trailing fraction of snapshots used by the Euclidean extinction fit
    #[arg(long, default_value_t = 0.02)]
    pub fit_window: f64,
    /// Stop once u_min drops below this fraction of its initial value
    #[arg(long, default_value_t = 0.05)]
    pub stop_fraction: f64,
    #[arg(long, default_value_t = 20_000_000)]
    pub max_steps: u64,
    /// Bisection width for the admissibility bound
    #[arg(long, default_value = "1/100")]
    pub delta: String,
    /// Refuse to run unless alpha lies in [1/k, c(n,k)]
    #[arg(long)]
    pub strict: bool,
    /// Snapshot CSV destination; the JSON summary goes next to it
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SturmArgs {
    /// Comma-separated rational coefficients, lowest degree first
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
    /// "0,inf" for the positive axis or "a,inf"
    #[arg(long, default_value = "0,inf", allow_hyphen_values = true)]
    pub interval: String,
    /// JSON destination
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}
