//! `gfseries`: transforms and identity checks for formal actions given as JSON specs.

mod commands;
mod output;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gfseries::fourier::HbarConvention;
use gfseries::oracle::OracleSeries;

use crate::commands::Kind;
use crate::output::{Format, Normalization};
use crate::spec::{ActionSpec, Overrides};

#[derive(Parser)]
#[command(name = "gfseries", version, about = "Combinatorial Fourier and Legendre transforms of formal actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Action specification (JSON).
    #[arg(long)]
    spec: PathBuf,
    /// Largest leg degree K.
    #[arg(long)]
    legs: Option<i64>,
    /// Largest edge count M.
    #[arg(long, conflicts_with = "loops")]
    edges: Option<i64>,
    /// Largest loop order N.
    #[arg(long)]
    loops: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Print `[v^k]` or `k! [v^k]`.
    #[arg(long, value_enum, default_value = "ordinary")]
    normalization: Normalization,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    LoopOrder,
    Shifted,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    Z,
    W,
    T,
    Gamma,
}

#[derive(Subcommand)]
enum Command {
    /// Z: the combinatorial Fourier transform of e^F.
    Fourier(Common),
    /// W = log Z: connected graphs.
    Log(Common),
    /// The Legendre transform of the action.
    Legendre(Common),
    /// T: trees.
    Trees(Common),
    /// Gamma: 2-edge-connected graphs.
    Gamma(Common),
    /// Z with the loop grading h attached.
    Hbar {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "loop-order")]
        convention: Convention,
    },
    /// Coefficients from brute-force pairing enumeration.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "z")]
        series: SeriesArg,
    },
    /// The identity suite.
    Verify(Common),
}

enum Outcome {
    Done(String),
    IdentityFailure(String),
}

fn load(common: &Common) -> anyhow::Result<spec::Action> {
    let text = std::fs::read_to_string(&common.spec).with_context(|| format!("reading {}", common.spec.display()))?;
    ActionSpec::parse(&text)?.validate(Overrides { legs: common.legs, edges: common.edges, loops: common.loops })
}

fn table(common: &Common, var: &str, s: &gfseries::Series) -> anyhow::Result<Outcome> {
    let rows = output::rows(s, common.normalization);
    Ok(Outcome::Done(output::render(var, &rows, common.format)?))
}

fn run(command: &Command) -> anyhow::Result<(Outcome, &Common)> {
    let out = match command {
        Command::Fourier(c) => {
            let a = load(c)?;
            let z = commands::z_series(&a, a.truncation.legs() as i64)?;
            (table(c, "y", &commands::finish(&a, &z, Kind::Graphs, a.hbar.then_some(HbarConvention::LoopOrder)))?, c)
        }
        Command::Log(c) => {
            let a = load(c)?;
            let w = gfseries::fourier::w_from_z(&commands::z_series(&a, a.truncation.legs() as i64)?)?;
            (table(c, "y", &commands::finish(&a, &w, Kind::Graphs, a.hbar.then_some(HbarConvention::LoopOrder)))?, c)
        }
        Command::Legendre(c) => {
            let a = load(c)?;
            (table(c, "x", &commands::finish(&a, &commands::legendre_series(&a)?, Kind::Plain, None))?, c)
        }
        Command::Trees(c) => {
            let a = load(c)?;
            (table(c, "y", &commands::finish(&a, &commands::tree_series(&a)?, Kind::Graphs, None))?, c)
        }
        Command::Gamma(c) => {
            let a = load(c)?;
            (table(c, "z", &commands::finish(&a, &commands::gamma_series(&a)?, Kind::Amputated, None))?, c)
        }
        Command::Hbar { common, convention } => {
            let a = load(common)?;
            let conv = match convention {
                Convention::LoopOrder => HbarConvention::LoopOrder,
                Convention::Shifted => HbarConvention::Shifted,
            };
            let z = commands::z_series(&a, a.truncation.legs() as i64)?;
            (table(common, "y", &commands::finish(&a, &z, Kind::Graphs, Some(conv)))?, common)
        }
        Command::Oracle { common, series } => {
            let a = load(common)?;
            let (which, kind, var) = match series {
                SeriesArg::Z => (OracleSeries::Z, Kind::Graphs, "y"),
                SeriesArg::W => (OracleSeries::W, Kind::Graphs, "y"),
                SeriesArg::T => (OracleSeries::T, Kind::Graphs, "y"),
                SeriesArg::Gamma => (OracleSeries::Gamma, Kind::Amputated, "z"),
            };
            let s = commands::oracle_series(&a, which)?;
            (table(common, var, &commands::finish(&a, &s, kind, None))?, common)
        }
        Command::Verify(c) => {
            let a = load(c)?;
            let checks = commands::verify(&a)?;
            let text = commands::render_checks(&checks, c.format)?;
            if checks.iter().all(|ch| ch.mismatches.is_empty()) {
                (Outcome::Done(text), c)
            } else {
                (Outcome::IdentityFailure(text), c)
            }
        }
    };
    Ok(out)
}

fn emit(common: &Common, text: &str) -> anyhow::Result<()> {
    match &common.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(&cli.command).and_then(|(outcome, common)| match outcome {
        Outcome::Done(t) => emit(common, &t).map(|_| 0),
        Outcome::IdentityFailure(t) => emit(common, &t).map(|_| 2),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
