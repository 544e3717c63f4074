//! `nsgkit` — build nonstationary Gabor systems from JSON configs, run
//! transforms and diagnostics, and emit machine-readable reports.
//!
//! Exit codes: 0 success, 2 invalid input, 3 singular symbol / not a frame,
//! 4 numerical guard tripped.

mod commands;
mod config;
mod error;
mod io;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "nsgkit",
    version,
    about = "Nonstationary Gabor systems and reproducing pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the pair's multiplier symbol; write it as CSV plus a JSON report.
    Symbol(CommonArgs),
    /// Write the JSON diagnostics report (bounds, flags, optional dense check).
    Diagnose(CommonArgs),
    /// Transform a signal into its coefficient array.
    Analyze(CommonArgs),
    /// Apply the synthesis operator to a coefficient array.
    Synthesize(CommonArgs),
    /// Invert the analysis: synthesize, then apply the inverse resolution.
    Reconstruct(CommonArgs),
    /// Compute the canonical dual windows of a translation-invariant frame.
    Dual(CommonArgs),
    /// Run the warped-system jobs of the config (symbols, derivative, energy, λ).
    Awh(CommonArgs),
    /// Run the dyadic wavelet jobs of the config.
    Wavelet(CommonArgs),
}

/// Flags shared by every verb.
#[derive(Args)]
pub(crate) struct CommonArgs {
    /// JSON run configuration.
    #[arg(long)]
    pub(crate) config: PathBuf,
    /// Input signal or coefficient file, as required by
    /// analyze/synthesize/reconstruct.
    #[arg(long = "in")]
    pub(crate) input: Option<PathBuf>,
    /// Overrides the command's primary output path.
    #[arg(long)]
    pub(crate) out: Option<PathBuf>,
    /// Payload format for signal and coefficient files.
    #[arg(long, value_enum, default_value_t = PayloadFormat::Csv)]
    pub(crate) format: PayloadFormat,
    /// Overrides the default operator tolerance recorded in reports.
    #[arg(long)]
    pub(crate) tolerance: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum PayloadFormat {
    Csv,
    Bin,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Symbol(args) => commands::cmd_symbol(args, true),
        Command::Diagnose(args) => commands::cmd_symbol(args, false),
        Command::Analyze(args) => commands::cmd_analyze(args),
        Command::Synthesize(args) => commands::cmd_synthesize(args),
        Command::Reconstruct(args) => commands::cmd_reconstruct(args),
        Command::Dual(args) => commands::cmd_dual(args),
        Command::Awh(args) => commands::cmd_awh(args),
        Command::Wavelet(args) => commands::cmd_wavelet(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
