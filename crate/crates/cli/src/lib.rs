//! Command-line surface for the nanotube model: chirality analysis,
//! band-structure export, representation tables, Clebsch-Gordan
//! decomposition, and a seeded verification suite.
//!
//! Exposed as a library so the commands can be driven (and timed) in
//! process; `src/main.rs` is a thin wrapper.

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod commands;
pub mod output;
pub mod verify;

/// Exit codes: 0 success, 1 verification failure, 2 bad input,
/// 3 I/O error, 4 Clebsch-Gordan precondition failure.
#[derive(Debug)]
pub enum CliError {
    BadInput(String),
    Io(String),
    CgPrecondition(String),
    VerifyFailure,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailure => 1,
            CliError::BadInput(_) => 2,
            CliError::Io(_) => 3,
            CliError::CgPrecondition(_) => 4,
        }
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            CliError::BadInput(m) | CliError::Io(m) | CliError::CgPrecondition(m) => Some(m),
            CliError::VerifyFailure => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "cnt", version, about = "Integer three-axes model of single-wall carbon nanotubes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// RNG seed for the verification suite.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Hopping energy scale applied to exported energies.
    #[arg(long, global = true, default_value_t = 1.0, allow_hyphen_values = true)]
    pub kappa: f64,
}

/// Chirality input: a raw three-axes triple or a two-axes pair.
#[derive(Debug, Clone, Args)]
pub struct CSpec {
    /// Chirality as a three-axes triple `c0,c1,c2` (zero coordinate sum).
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,

    /// Chirality as a two-axes pair `n1,n2`.
    #[arg(long, allow_hyphen_values = true)]
    pub hamada: Option<String>,
}

/// A reciprocal-space point: a raw triple or a line-and-parameter pair.
#[derive(Debug, Clone, Args)]
pub struct KSpec {
    /// Raw triple `k0,k1,k2` (coordinates must sum to zero).
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,

    /// Allowed-line index.
    #[arg(long, allow_hyphen_values = true)]
    pub line: Option<i64>,

    /// Parameter along the line.
    #[arg(long, allow_hyphen_values = true)]
    pub param: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chirality analysis: symmetry invariants, class, metallicity.
    Describe {
        #[command(flatten)]
        cspec: CSpec,
    },
    /// Band-structure sampling along all allowed lines.
    Bands {
        #[command(flatten)]
        cspec: CSpec,
        /// Samples per line (at least 2).
        #[arg(long, default_value_t = 128)]
        samples: usize,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Also write a gnuplot script next to the CSV (requires --out).
        #[arg(long, default_value_t = false)]
        gnuplot: bool,
    },
    /// Representation matrices and classification at one point.
    Reps {
        #[command(flatten)]
        cspec: CSpec,
        #[command(flatten)]
        kspec: KSpec,
    },
    /// Clebsch-Gordan decomposition of a tensor product.
    Cg {
        #[command(flatten)]
        cspec: CSpec,
        /// First factor `k0,k1,k2`.
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        /// Second factor `k0,k1,k2`.
        #[arg(long, allow_hyphen_values = true)]
        kprime: String,
    },
    /// Seeded invariant suite over every module.
    Verify {
        #[command(flatten)]
        cspec: CSpec,
        /// Random trials per invariant.
        #[arg(long, default_value_t = 200)]
        trials: u64,
    },
}

/// Parses argv and runs the selected command; returns the process exit
/// code. Diagnostics go to stderr, payload output to stdout (or --out).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version through this path too
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut stdout = std::io::stdout().lock();
    match dispatch(&cli, &mut stdout) {
        Ok(()) => 0,
        Err(e) => {
            if let Some(m) = e.message() {
                eprintln!("error: {m}");
            }
            e.exit_code()
        }
    }
}

pub fn dispatch(cli: &Cli, out: &mut dyn std::io::Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Describe { cspec } => commands::describe(cspec, cli.format, out),
        Command::Bands {
            cspec,
            samples,
            out: path,
            gnuplot,
        } => commands::bands(cspec, *samples, cli.kappa, cli.format, path.as_deref(), *gnuplot, out),
        Command::Reps { cspec, kspec } => commands::reps(cspec, kspec, cli.format, out),
        Command::Cg { cspec, k, kprime } => commands::cg(cspec, k, kprime, cli.format, out),
        Command::Verify { cspec, trials } => verify::run(cspec, cli.seed, *trials, out),
    }
}
