//! The `neville` command-line front end.
//!
//! Exit codes: 0 success, 1 certification failure, 2 usage or domain error,
//! 3 precision-policy failure.

mod commands;

pub use commands::RunConfig;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::transforms::Method;
use crate::weights::CertificationReport;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CERTIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "neville", version, about = "Arbitrary-precision convergence acceleration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Per-order estimates and χ for one or more methods.
    Accelerate(RunArgs),
    /// Side-by-side χ trajectories of several methods.
    Compare(RunArgs),
    /// Subleading coefficients c_j(n) and recognized closed forms.
    Coeffs(CoeffArgs),
    /// Hydrogen Bethe logarithm ln k_0 for 1S, 2S or 2P.
    Bethe(BetheArgs),
    /// Point evaluation of the Lerch transcendent Φ(z, s, a).
    Lerch(LerchCliArgs),
    /// Check the closed-form weights against the exact Vandermonde inverse.
    VerifyWeights(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Plain,
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    /// model, bethe-1s, bethe-2s, bethe-2p, or a file with one decimal per line.
    #[arg(long)]
    series: String,
    /// Transformation(s) to run; repeat the flag for several.
    #[arg(long = "method", value_parser = parse_method)]
    methods: Vec<Method>,
    /// Highest order n (defaults to 20, or to the whole file).
    #[arg(long)]
    order: Option<usize>,
    /// Decimal places in the output.
    #[arg(long, default_value_t = 30)]
    digits: u32,
    /// Read file lines as partial sums s_n instead of terms a_k.
    #[arg(long)]
    partial_sums: bool,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug, Clone)]
struct CoeffArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Highest coefficient index (at most 10).
    #[arg(long, default_value_t = 4)]
    j_max: usize,
    /// Denominator bound for closed-form recognition.
    #[arg(long, default_value_t = crate::asymptotics::DEFAULT_MAX_DEN)]
    max_den: u64,
    /// Emit the d_j(n) trajectory for this j instead of the coefficient table.
    #[arg(long)]
    trajectory: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct BetheArgs {
    /// 1S, 2S or 2P.
    state: String,
    /// Decimal places (at most 150).
    #[arg(long, default_value_t = 50)]
    digits: u32,
    /// Fixed transformation order instead of automatic doubling.
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LerchPath {
    Auto,
    Direct,
    Transformed,
}

#[derive(Args, Debug, Clone)]
struct LerchCliArgs {
    /// Real z, as a decimal or p/q.
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    #[arg(long, default_value_t = 1)]
    s: u32,
    #[arg(long)]
    a: u64,
    /// Significant digits.
    #[arg(long, default_value_t = 30)]
    digits: u32,
    #[arg(long, value_enum, default_value_t = LerchPath::Auto)]
    path: LerchPath,
}

#[derive(Args, Debug, Clone)]
struct VerifyArgs {
    /// Highest order checked (at least 10).
    #[arg(long, default_value_t = 20)]
    n_max: usize,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::PrecisionPolicy { .. } | Error::NotConverged { .. } => EXIT_PRECISION,
        _ => EXIT_USAGE,
    }
}

/// Exit status of `verify-weights` for a certification report.
pub fn certification_exit_code(report: &CertificationReport) -> i32 {
    if report.all_usable() {
        EXIT_OK
    } else {
        EXIT_CERTIFICATION
    }
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let outcome = match cli.command {
        Command::Accelerate(a) => commands::accelerate(&a),
        Command::Compare(a) => commands::compare(&a),
        Command::Coeffs(a) => commands::coeffs(&a),
        Command::Bethe(a) => commands::bethe(&a),
        Command::Lerch(a) => commands::lerch(&a),
        Command::VerifyWeights(a) => commands::verify_weights(&a),
    };
    match outcome {
        Ok(commands::Output { text, path, code, note }) => {
            if let Some(note) = note {
                let _ = writeln!(err, "{note}");
            }
            let written = match path {
                Some(p) => std::fs::write(&p, text.as_bytes()).map_err(|e| format!("cannot write {}: {e}", p.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => code,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
