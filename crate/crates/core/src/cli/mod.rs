//! Command-line front end.
//!
//! Every command produces a [`Table`], written as CSV (default) or as a JSON
//! array of row objects. Exit status: 0 on success, 1 on a tolerance breach
//! in `verify` or an internal failure, 2 for invalid arguments, 3 when
//! `verify` would exceed the oracle's dimension cap.

mod figures;
mod table;
mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use figures::{figure, purity_grid, FIG1_COPIES, FIG2_MAX_COPIES, FIG2_PURITIES, FIG3_COPIES, FIG4_MAX_COPIES};
pub use table::{format_g, Cell, Table};
pub use verify::{checks_table, mixed_loads, pure_loads, verification_sweep, Check, VERIFY_PURITIES};

use crate::asym::AsymptoticKind;
use crate::error::{Error, Result};
use crate::mixed::me_mixed_with;
use crate::par::Execution;
use crate::pure::{me_asymmetric, me_symmetric, ua_asymmetric, ua_symmetric, PortLoad};
use crate::universal::{CoeffSource, Prior};

#[derive(Debug, Parser)]
#[command(name = "progdisc", version, about = "Optimal programmable discrimination of multi-copy qubit states")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Run on a single thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Unambiguous: minimum inconclusive probability.
    Ua,
    /// Minimum error probability.
    Me,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pure states. Columns: n_a, n_b, n_c, mode, value.
    Pure(PureArgs),
    /// States of known purity, n × m × n. Columns: n, m, r, value.
    Mixed {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: f64,
    },
    /// Purity averaged over a prior. Columns: n, m, prior, value.
    Universal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// hard-sphere, bures or chernoff.
        #[arg(long)]
        prior: Prior,
    },
    /// Asymptotic approximations. Columns: kind, n, m, r, value.
    Asym {
        /// ua-program-limit, me-program-limit, me-program-subleading,
        /// ua-data-limit, me-data-limit, me-symmetric, mixed-leading,
        /// mixed-subleading, mixed-gaussian or high-purity-fit.
        #[arg(long)]
        kind: AsymptoticKind,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        r: Option<f64>,
    },
    /// Data behind figures 1-4.
    Figure {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
    },
    /// Compare closed forms with the brute-force oracle.
    /// Columns: check, n_a, n_b, n_c, r, closed_form, oracle, abs_diff, pass.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_total_copies: u32,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

#[derive(Debug, Args)]
pub struct PureArgs {
    /// Copies per program port (with --m).
    #[arg(long, requires = "m", conflicts_with_all = ["na", "nb", "nc"])]
    pub n: Option<u32>,
    /// Data copies (with --n).
    #[arg(long, requires = "n")]
    pub m: Option<u32>,
    #[arg(long, requires_all = ["nb", "nc"])]
    pub na: Option<u32>,
    #[arg(long, requires_all = ["na", "nc"])]
    pub nb: Option<u32>,
    #[arg(long, requires_all = ["na", "nb"])]
    pub nc: Option<u32>,
    #[arg(long, value_enum)]
    pub mode: Mode,
}

/// Result of a command: the emitted table and whether every check passed.
#[derive(Debug)]
pub struct Outcome {
    pub table: Table,
    pub passed: bool,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::DimensionCap { .. } => 3,
        Error::ZeroCopies(_) | Error::TooManyCopies { .. } | Error::InvalidPurity(_) | Error::InvalidArgument(_) => 2,
        _ => 1,
    }
}

fn pure(args: &PureArgs) -> Result<Table> {
    let mut table = Table::new(&["n_a", "n_b", "n_c", "mode", "value"]);
    let (load, symmetric) = match (args.n, args.m, args.na, args.nb, args.nc) {
        (Some(n), Some(m), None, None, None) => (PortLoad::symmetric(n, m)?, true),
        (None, None, Some(a), Some(b), Some(c)) => (PortLoad::new(a, b, c)?, false),
        _ => {
            return Err(Error::InvalidArgument(
                "give either --n and --m, or --na, --nb and --nc".into(),
            ))
        }
    };
    let value = match (args.mode, symmetric) {
        (Mode::Ua, true) => ua_symmetric(load.n_a, load.n_b)?,
        (Mode::Me, true) => me_symmetric(load.n_a, load.n_b)?,
        (Mode::Ua, false) => ua_asymmetric(load)?,
        (Mode::Me, false) => me_asymmetric(load)?,
    };
    let mode = match args.mode {
        Mode::Ua => "ua",
        Mode::Me => "me",
    };
    table.push(vec![load.n_a.into(), load.n_b.into(), load.n_c.into(), mode.into(), value.into()]);
    Ok(table)
}

/// A note when an approximation is evaluated outside the range it describes.
pub fn regime_warning(kind: AsymptoticKind, n: Option<u32>, r: Option<f64>) -> Option<String> {
    let (n, r) = (f64::from(n?), r?);
    let outside = match kind {
        AsymptoticKind::HighPurityFit => n * r * r < 1.0,
        AsymptoticKind::MixedGaussian => r * n.sqrt() > 1.0,
        AsymptoticKind::MixedSubleading => n * r < 1.0,
        _ => false,
    };
    outside.then(|| format!("{kind} is not accurate at n = {n}, r = {r}"))
}

/// Execute a parsed command.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let done = |table| Ok(Outcome { table, passed: true });
    match &cli.command {
        Command::Pure(args) => done(pure(args)?),
        Command::Mixed { n, m, r } => {
            let value = me_mixed_with(*n, *m, CoeffSource::FixedPurity(*r), exec)?;
            let mut table = Table::new(&["n", "m", "r", "value"]);
            table.push(vec![(*n).into(), (*m).into(), (*r).into(), value.into()]);
            done(table)
        }
        Command::Universal { n, m, prior } => {
            let value = me_mixed_with(*n, *m, (*prior).into(), exec)?;
            let mut table = Table::new(&["n", "m", "prior", "value"]);
            table.push(vec![(*n).into(), (*m).into(), prior.to_string().into(), value.into()]);
            done(table)
        }
        Command::Asym { kind, n, m, r } => {
            let value = kind.evaluate(*n, *m, *r)?;
            if let Some(note) = regime_warning(*kind, *n, *r) {
                eprintln!("warning: {note}");
            }
            let mut table = Table::new(&["kind", "n", "m", "r", "value"]);
            table.push(vec![kind.name().into(), (*n).into(), (*m).into(), (*r).into(), value.into()]);
            done(table)
        }
        Command::Figure { id } => done(figure(*id, exec)?),
        Command::Verify { max_total_copies, tol } => {
            if !(tol.is_finite() && *tol >= 0.0) {
                return Err(Error::InvalidArgument(format!("tolerance must be non-negative, got {tol}")));
            }
            let checks = verification_sweep(*max_total_copies, exec)?;
            let passed = checks.iter().all(|c| c.passes(*tol));
            Ok(Outcome {
                table: checks_table(&checks, *tol),
                passed,
            })
        }
    }
}

fn emit(cli: &Cli, table: &Table) -> Result<()> {
    let out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    match cli.format {
        Format::Csv => table.write_csv(out),
        Format::Json => table.write_json(out),
    }
}

/// Parse `args`, run, write the output, and return the exit status.
pub fn main_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let outcome = run(&cli).and_then(|outcome| emit(&cli, &outcome.table).map(|()| outcome));
    match outcome {
        Ok(outcome) if outcome.passed => 0,
        Ok(_) => {
            eprintln!("error: tolerance exceeded");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
