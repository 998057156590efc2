//! `polybound`: coefficient bounds and exact characteristic / minimal
//! polynomials of integer matrices.
//!
//! Exit codes: 0 success, 1 other failure, 2 unreadable or malformed
//! matrix file, 3 invalid flags, 4 verification failure.

mod render;

use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polybound::{Error, IntegerMatrix, MatrixFormat, DEFAULT_PRIME_BITS};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_FLAGS: u8 = 3;
const EXIT_VERIFY: u8 = 4;

/// Environment variable capping the worker thread count (0 = automatic).
const THREADS_ENV: &str = "POLYBOUND_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "polybound",
    version,
    about = "Coefficient bounds and exact characteristic/minimal polynomials of integer matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a-priori bounds on the polynomial coefficients.
    Bound(BoundArgs),
    /// Compute the polynomial by modular images and Chinese remaindering.
    Compute(ComputeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Subject {
    Charpoly,
    Minpoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Dense,
    Sms,
}

impl From<FormatArg> for MatrixFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Dense => MatrixFormat::Dense,
            FormatArg::Sms => MatrixFormat::Sms,
        }
    }
}

#[derive(Debug, Args)]
struct Common {
    subject: Subject,
    /// Matrix file.
    file: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Bit size of the primes used for modular images.
    #[arg(long, default_value_t = DEFAULT_PRIME_BITS, value_parser = clap::value_parser!(u32).range(2..=62))]
    prime_bits: u32,
    /// Matrix file format.
    #[arg(long, value_enum, default_value_t = FormatArg::Dense)]
    format: FormatArg,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    common: Common,
    /// Minimal polynomial degree to bound for.
    #[arg(long, conflicts_with = "probe")]
    degree: Option<usize>,
    /// Learn the minimal polynomial degree from one modular image.
    #[arg(long)]
    probe: bool,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    common: Common,
    /// Re-check the result against the exact oracle (small matrices only).
    #[arg(long)]
    verify: bool,
}

/// Failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn flags(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_FLAGS,
            message: message.into(),
        }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VERIFY,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::DimensionMismatch { .. } | Error::NotSquare { .. } => {
                EXIT_PARSE
            }
            Error::InvalidDegree { .. } | Error::InvalidBitSize(_) => EXIT_FLAGS,
            Error::Verification(_) => EXIT_VERIFY,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn load(common: &Common) -> Result<IntegerMatrix, Failure> {
    let file = File::open(&common.file).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", common.file.display()),
    })?;
    polybound::load_matrix(file, common.format.into()).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", common.file.display(), f.message);
        f
    })
}

fn thread_count() -> Result<usize, Failure> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(0),
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::flags(format!(
                "{THREADS_ENV} must be a non-negative integer, got '{v}'"
            ))
        }),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let threads = thread_count()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Failure {
            code: EXIT_FAILURE,
            message: e.to_string(),
        })?;
    pool.install(|| match cli.command {
        Command::Bound(args) => {
            let a = load(&args.common)?;
            match args.common.subject {
                Subject::Charpoly => {
                    render::charpoly_bounds(&a, args.common.prime_bits, args.common.json)
                }
                Subject::Minpoly => {
                    let degree = match (args.degree, args.probe) {
                        (Some(d), _) => render::DegreeSource::Given(d),
                        (None, true) => render::DegreeSource::Probe,
                        (None, false) => {
                            return Err(Failure::flags(
                                "bound minpoly needs --degree <d> or --probe",
                            ))
                        }
                    };
                    render::minpoly_bounds(&a, degree, args.common.prime_bits, args.common.json)
                }
            }
        }
        Command::Compute(args) => {
            let a = load(&args.common)?;
            render::compute(
                &a,
                args.common.subject,
                args.common.prime_bits,
                args.common.json,
                args.verify,
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_FLAGS } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("polybound: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
