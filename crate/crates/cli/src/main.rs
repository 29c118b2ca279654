//! `curvalpha`: sectional curvature of area-preserving torus diffeomorphisms
//! under the right-invariant H1 (Euler-alpha) metric, in exact arithmetic.
//!
//! Subcommands: single-plane evaluation, alpha sweeps, threshold isolation,
//! lattice scans, and the randomized invariant verification suite.

mod args;
mod cmd;
mod out;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};

/// A command failure with its process exit code (2 = usage/validation,
/// 3 = degenerate plane, 1 = verification failure).
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<curvalpha_core::Error> for Failure {
    fn from(err: curvalpha_core::Error) -> Self {
        let code = match err {
            curvalpha_core::Error::DegeneratePlane => 3,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = read_thread_cap() {
        // Scan work items run on the global rayon pool; cap it before first use.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let result = match cli.command {
        Command::Curvature(args) => cmd::curvature::run(args),
        Command::Sweep(args) => cmd::sweep::run(args),
        Command::Alpha0(args) => cmd::alpha0::run(args),
        Command::Scan(args) => cmd::scan::run(args),
        Command::Verify(args) => cmd::verify::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn read_thread_cap() -> Option<usize> {
    let raw = std::env::var("CURVALPHA_THREADS").ok()?;
    match raw.trim().parse::<usize>() {
        Ok(n) if n >= 1 => Some(n),
        _ => {
            eprintln!("warning: ignoring invalid CURVALPHA_THREADS={raw:?}");
            None
        }
    }
}
