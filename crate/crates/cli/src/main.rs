//! `wallis`: reproduction tables and the verification suite.
//!
//! Exit status is 0 on success, 1 when a check or bound fails and 2 on a
//! usage or domain error.

mod commands;
mod report;
mod selector;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use commands::{BoundKind, FamilyArg, IntegralArg, MethodArg, Outcome, PotentialArg, ProfileArg, SumMode};
use report::Format;

#[derive(Parser)]
#[command(name = "wallis", version, about = "Wallis product, gamma-ratio series and variational hydrogen levels")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,

    /// Tolerance for the command's check (each command has its own default).
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Write the table here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// 2·P_n against π with the envelope π/(4n+2).
    Pi {
        /// Selector: `n`, `n1,n2,...` or `start:stop:step`.
        #[arg(long, default_value = "1,10,100,1000,1e4,1e5,1e6")]
        n: String,
    },
    /// Telescoped partial sums against direct summation.
    Sum {
        #[arg(long, value_enum, default_value_t = SumMode::Simple)]
        mode: SumMode,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        m: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        k: f64,
        #[arg(long, default_value = "1,2,10,100,1000,1e4")]
        n: String,
    },
    /// Optimised variational energies against the exact levels.
    Variational {
        #[arg(long, value_enum, default_value_t = FamilyArg::Gaussian)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value_t = PotentialArg::Coulomb)]
        potential: PotentialArg,
        /// A single value runs from `--l-min` up to it; a list or range is used as given.
        #[arg(long, default_value = "10")]
        l_max: String,
        /// Lowest l when `--l-max` is a single value.
        #[arg(long)]
        l_min: Option<u64>,
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
    },
    /// Gamma-ratio sandwiches and the Wendel limit.
    Bounds {
        #[arg(long, value_enum, default_value_t = BoundKind::Kazarinoff)]
        kind: BoundKind,
        /// Grid of n, x or l_max values (default depends on the kind).
        #[arg(long)]
        grid: Option<String>,
        /// Shift s for the Wendel limit.
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        s: f64,
    },
    /// Closed-form integrals against quadrature of their integrands.
    Integrals {
        #[arg(long, value_enum, default_value_t = IntegralArg::All)]
        family: IntegralArg,
        #[arg(long, default_value = "0:15:1")]
        l: String,
    },
    /// Runs every invariant check; exits 0 only if all pass.
    Verify {
        #[arg(long, value_enum, default_value_t = ProfileArg::Strict)]
        profile: ProfileArg,
        #[arg(long, default_value_t = 3.0, hide = true)]
        perturb_a1: f64,
    },
}

fn execute(cli: &Cli) -> Result<Outcome> {
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            bail!("--tol must be positive and finite, got {t}");
        }
    }
    Ok(match &cli.command {
        Command::Pi { n } => commands::pi(n)?,
        Command::Sum { mode, m, k, n } => commands::sum(*mode, *m, *k, n, cli.tol)?,
        Command::Variational {
            family,
            potential,
            l_max,
            l_min,
            method,
        } => commands::variational((*family).into(), (*potential).into(), l_max, *l_min, (*method).into())?,
        Command::Bounds { kind, grid, s } => {
            commands::bounds(*kind, grid.as_deref().unwrap_or(kind.default_grid()), *s, cli.tol)?
        }
        Command::Integrals { family, l } => commands::integrals(*family, l, cli.tol)?,
        Command::Verify { profile, perturb_a1 } => commands::verify(*profile, *perturb_a1),
    })
}

fn emit(cli: &Cli, outcome: &Outcome) -> Result<()> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    outcome.table.write(cli.format, &mut out)?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &outcome) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        for f in &outcome.failures {
            eprintln!("failed: {f}");
        }
        ExitCode::from(1)
    }
}
