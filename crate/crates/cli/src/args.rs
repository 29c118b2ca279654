//! Command-line surface and flag parsing.

use clap::{Args, Parser, Subcommand, ValueEnum};
use curvalpha_core::{parse_scalar, Scalar, WaveVector};

#[derive(Parser)]
#[command(
    name = "curvalpha",
    version,
    about = "Exact sectional curvature of 2-torus Euler-alpha flows",
    long_about = "Computes sectional curvatures of the group of area-preserving \
diffeomorphisms of the flat 2-torus under the right-invariant H1 (Euler-alpha) \
metric, in exact rational arithmetic. The alpha -> 0 limit reproduces Arnold's \
L2 curvature formulas, which double as built-in oracles."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Evaluate the curvature of one cosine plane at one alpha.
    Curvature(CurvatureArgs),
    /// Sweep alpha over a rational grid and emit CSV rows.
    Sweep(SweepArgs),
    /// Isolate the positivity threshold alpha0 for one plane (JSON).
    Alpha0(Alpha0Args),
    /// Scan wave-vector lattices for alpha0 statistics (JSON lines or CSV).
    Scan(ScanArgs),
    /// Run the randomized exact invariant suite and print frozen constants.
    Verify(VerifyArgs),
}

/// Parses "a,b" into a validated wave vector.
pub fn parse_wave_vector(raw: &str) -> Result<WaveVector, String> {
    let (a, b) = raw
        .split_once(',')
        .ok_or_else(|| format!("expected two comma-separated integers, got {raw:?}"))?;
    let k1: i64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad component {a:?}"))?;
    let k2: i64 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad component {b:?}"))?;
    WaveVector::checked(k1, k2).map_err(|e| e.to_string())
}

/// Parses a rational-or-decimal literal into an exact scalar.
pub fn parse_exact(raw: &str) -> Result<Scalar, String> {
    parse_scalar(raw).map_err(|e| e.to_string())
}

#[derive(Args)]
pub struct CurvatureArgs {
    /// First wave vector, "a,b".
    #[arg(long, value_parser = parse_wave_vector, allow_hyphen_values = true)]
    pub k: WaveVector,
    /// Second wave vector, "c,d".
    #[arg(long, value_parser = parse_wave_vector, allow_hyphen_values = true)]
    pub l: WaveVector,
    /// Metric parameter alpha (rational like "1/4" or decimal like "0.25").
    #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
    pub alpha: Scalar,
    /// Torus area S; scales reported magnitudes only.
    #[arg(long, value_parser = parse_exact, default_value = "1")]
    pub area: Scalar,
    /// Print exact rationals instead of 12-digit decimals.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Args)]
pub struct SweepArgs {
    /// First wave vector, "a,b".
    #[arg(long, value_parser = parse_wave_vector, allow_hyphen_values = true, default_value = "9,11")]
    pub k: WaveVector,
    /// Second wave vector, "c,d".
    #[arg(long, value_parser = parse_wave_vector, allow_hyphen_values = true, default_value = "11,12")]
    pub l: WaveVector,
    /// Left end of the alpha grid (inclusive).
    #[arg(long = "alpha-min", value_parser = parse_exact, allow_hyphen_values = true, default_value = "0")]
    pub alpha_min: Scalar,
    /// Right end of the alpha grid (inclusive).
    #[arg(long = "alpha-max", value_parser = parse_exact, allow_hyphen_values = true, default_value = "1")]
    pub alpha_max: Scalar,
    /// Number of grid points (at least 2).
    #[arg(long, default_value_t = 200)]
    pub steps: u32,
    /// Torus area S.
    #[arg(long, value_parser = parse_exact, default_value = "1")]
    pub area: Scalar,
    /// Write CSV to this file instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args)]
pub struct Alpha0Args {
    /// First wave vector, "a,b".
    #[arg(long, value_parser = parse_wave_vector, allow_hyphen_values = true)]
    pub k: WaveVector,
    /// Second wave vector, "c,d".
    #[arg(long, value_parser = parse_wave_vector, allow_hyphen_values = true)]
    pub l: WaveVector,
    /// Report whether alpha0 lies below this cap.
    #[arg(long, value_parser = parse_exact, default_value = "1")]
    pub cap: Scalar,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum ScanFormat {
    Jsonl,
    Csv,
}

#[derive(Args)]
pub struct ScanArgs {
    /// Bound on the magnitude of each wave-vector component.
    #[arg(long)]
    pub kmax: u32,
    /// Offsets eps as a semicolon-separated list, e.g. "1,0;0,1;1,1".
    #[arg(long)]
    pub eps: String,
    /// Output format: JSON lines (with trailing summary object) or CSV.
    #[arg(long, value_enum, default_value_t = ScanFormat::Jsonl)]
    pub format: ScanFormat,
    /// Write records to this file instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Seed for the randomized case generator.
    #[arg(long, default_value_t = 20260809)]
    pub seed: u64,
    /// Number of randomized cases per identity.
    #[arg(long, default_value_t = 200)]
    pub cases: u32,
    /// Wave-vector components are drawn from [-bound, bound].
    #[arg(long = "component-bound", default_value_t = 12)]
    pub component_bound: u32,
}
