//! `fermat-hms`: batch driver for the exact computations in `hms-core`.

mod commands;
mod config;
mod document;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use hms_core::stability::Kind;

use config::{ChiNormalization, Format, Overrides, RunConfig};
use document::Status;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] hms_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

/// A rank-one factorization `(a, s, shift)`: split `x^a * x^(n-a)`,
/// grading twist `s`, shifted `shift` times.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ObjectSpec {
    pub a: i64,
    pub s: i64,
    pub shift: i64,
}

impl FromStr for ObjectSpec {
    type Err = String;
    fn from_str(text: &str) -> Result<Self, String> {
        let parts: Vec<i64> = text.split(',').map(|p| p.trim().parse::<i64>()).collect::<Result<_, _>>().map_err(|e| format!("{text:?}: {e}"))?;
        match parts[..] {
            [a, s] => Ok(ObjectSpec { a, s, shift: 0 }),
            [a, s, shift] => Ok(ObjectSpec { a, s, shift }),
            _ => Err(format!("{text:?}: expected a,s or a,s,shift")),
        }
    }
}

impl fmt::Display for ObjectSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.s, self.shift)
    }
}

#[derive(Parser, Debug)]
#[command(name = "fermat-hms", version, about = "Exact computations for Fermat potentials x_1^n + ... + x_n^n")]
struct Cli {
    /// exponent and number of variables
    #[arg(long, global = true)]
    n: Option<i64>,
    /// truncation in w = q^(1/2)
    #[arg(long = "wN", global = true)]
    w_trunc: Option<usize>,
    /// truncation in x
    #[arg(long = "xN", global = true)]
    x_trunc: Option<usize>,
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// write the document here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// key=value file supplying defaults; flags override it
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Euler pairing normalization for `euler`
    #[arg(long, value_enum, global = true)]
    chi: Option<ChiNormalization>,
    /// report both translate conventions where relevant
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Gepner,
    LargeRadius,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Per-factor translate table of x^n
    Mf {
        /// also check twist^n ~ [2] on all indecomposables
        #[arg(long)]
        periodicity: bool,
    },
    /// Hom table between two rank-one factorizations
    Homtable {
        #[arg(long, default_value = "1,0,0")]
        source: ObjectSpec,
        #[arg(long, default_value = "1,0,0")]
        target: ObjectSpec,
    },
    /// Hom tables of the orbit category of the tensor power
    Orbit,
    /// Euler pairing row chi(O, tau~^(-delta) O)
    Euler,
    /// Stable collections, mutations and their quivers
    Stability {
        #[arg(long, value_enum, default_value = "gepner")]
        kind: KindArg,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        first: i64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        last: i64,
        /// mutate the pair at this position
        #[arg(long)]
        mutate: Option<usize>,
        /// apply the monodromy this many times first
        #[arg(long, default_value_t = 0)]
        monodromy: u32,
    },
    /// q-series identities around the quantum dilogarithm
    Qseries {
        #[command(subcommand)]
        which: Qseries,
    },
    /// Poincare polynomial from twisted sectors
    Poincare,
    /// Run the acceptance criteria
    VerifyAll {
        /// comma-separated criterion ids; all when omitted
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Subcommand, Debug)]
enum Qseries {
    /// x^m coefficients of the logarithm against the closed form
    Dilog,
    /// generating function against its double sum, odd k
    Gen {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// the weight-two quasimodular identity
    Quasimodular,
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let flags = Overrides { n: cli.n, w_trunc: cli.w_trunc, x_trunc: cli.x_trunc, format: cli.format, out: cli.out, chi: cli.chi, verbose: cli.verbose };
    let cfg = RunConfig::load(cli.config.as_deref(), flags)?;
    let doc = match cli.command {
        Command::Mf { periodicity } => commands::mf(&cfg, periodicity)?,
        Command::Homtable { source, target } => commands::homtable(&cfg, source, target)?,
        Command::Orbit => commands::orbit(&cfg)?,
        Command::Euler => commands::euler(&cfg)?,
        Command::Stability { kind, first, last, mutate, monodromy } => {
            let kind = match kind {
                KindArg::Gepner => Kind::Gepner,
                KindArg::LargeRadius => Kind::LargeRadius,
            };
            commands::stability(&cfg, &commands::StabilityArgs { kind, first, last, mutate, monodromy })?
        }
        Command::Qseries { which } => match which {
            Qseries::Dilog => commands::qseries_dilog(&cfg)?,
            Qseries::Gen { k } => commands::qseries_gen(&cfg, k)?,
            Qseries::Quasimodular => commands::qseries_quasimodular(&cfg)?,
        },
        Command::Poincare => commands::poincare(&cfg)?,
        Command::VerifyAll { only } => commands::verify_all(&only)?,
    };
    let text = match cfg.format {
        Format::Tsv => doc.to_tsv(),
        Format::Json => doc.to_json(),
    };
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(if doc.status == Status::Ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
