//! Command-line front end for the bound computations and oracles.
//!
//! One binary, one `--cmd` flag: `bounds` and `compare` tabulate the
//! refined bound against the classical one over parameter sweeps,
//! `verify` plays brute-force component counts against the bounds,
//! `tightness` reproduces the near-tight construction, `grassmannian`
//! evaluates the incidence application, and `counterexample` enumerates
//! the zero set that overshoots its degree product.
//!
//! Exit codes: 0 when everything passed, 1 when some verification row
//! failed, 2 for usage or parse errors.

mod commands;
mod instance;
mod sweep;
mod table;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use signbounds::Bpr8Range;

use sweep::{parse_sweep, Sweep};

#[derive(Parser)]
#[command(
    name = "signbounds",
    version,
    about = "Exact bounds on connected components of sign conditions on real varieties"
)]
pub struct Args {
    /// Which table to compute.
    #[arg(long = "cmd", value_enum)]
    cmd: Cmd,

    /// Family size s (scalar or lo..hi).
    #[arg(long, value_parser = parse_sweep)]
    s: Option<Sweep>,

    /// Ambient dimension k (scalar or lo..hi).
    #[arg(long, value_parser = parse_sweep)]
    k: Option<Sweep>,

    /// Variety dimension k' (scalar or lo..hi).
    #[arg(long, value_parser = parse_sweep)]
    kprime: Option<Sweep>,

    /// Family degree bound d (scalar or lo..hi).
    #[arg(long, value_parser = parse_sweep)]
    d: Option<Sweep>,

    /// Variety degree bound d0 (scalar or lo..hi).
    #[arg(long, value_parser = parse_sweep)]
    d0: Option<Sweep>,

    /// Point count n for the grassmannian command (scalar or lo..hi).
    #[arg(long, value_parser = parse_sweep)]
    n: Option<Sweep>,

    /// Equation count m for the counterexample command (scalar or lo..hi).
    #[arg(long, value_parser = parse_sweep)]
    m: Option<Sweep>,

    /// Instance file (JSON) for verify; omit to use the built-in corpus.
    #[arg(long)]
    input: Option<PathBuf>,

    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,

    /// Table format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Base RNG seed for generated instances.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Grid oracle resolution for two-variable verify.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(2..))]
    resolution: u32,

    /// Which statement of the classical bound to tabulate.
    #[arg(long = "bpr8-range", value_enum, default_value_t = RangeArg::Section11)]
    bpr8_range: RangeArg,

    /// Enumeration cap for the counterexample scan.
    #[arg(long, default_value_t = 10_000_000)]
    cap: u64,

    /// Test hook: inflate every oracle total by this much.
    #[arg(long = "corrupt-oracle", hide = true, default_value_t = 0)]
    corrupt_oracle: u64,
}

/// The available commands.
#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Cmd {
    Bounds,
    Compare,
    Verify,
    Tightness,
    Grassmannian,
    Counterexample,
}

/// Output table formats.
#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Command-line face of the two classical-bound summation ranges.
#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum RangeArg {
    Section11,
    Abstract,
}

impl From<RangeArg> for Bpr8Range {
    fn from(r: RangeArg) -> Bpr8Range {
        match r {
            RangeArg::Section11 => Bpr8Range::Section11,
            RangeArg::Abstract => Bpr8Range::Abstract,
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match commands::run(&args) {
        Ok(rendered) => {
            if let Err(msg) = write_output(args.output.as_deref(), &rendered.text) {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
            if rendered.all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
