use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use predual::exactalg::Field;
use predual::fixtures;
use predual::jobs::{self, Outcome};

/// Exact coend and Hopf-structure computations for fiber functors.
///
/// Exit status: 0 when every check passes, 1 when a check fails, 2 on input errors.
#[derive(Debug, Parser)]
#[command(name = "predual", version)]
struct Cli {
    /// Ground field, overriding the document: `Q` or `Fp:<p>`.
    #[arg(long, global = true)]
    field: Option<Field>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Use a shipped example document.
    #[arg(long, global = true, conflicts_with = "input")]
    fixture: Option<String>,
    /// Read the document from a file instead of stdin.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check relations, tensor, duality and comodule data.
    Validate,
    /// Build End^∨(F) with every structure the document supports.
    Reconstruct,
    /// Lift the functor to comodules over End^∨(F).
    Lift,
    /// The reconstruction map End^∨(F) → B for a document with a coalgebra section.
    RhoTilde,
    /// Nat^∨(F,F), Nat(F,F) and the pairing between them.
    Nat,
    /// Characters of End^∨(F) and their actions on every F(C).
    Characters,
    /// Decide whether two symmetry expressions are equal.
    Coherence {
        left: String,
        right: String,
        /// Also compare the matrices at these dimensions, e.g. `A=2,B=3`.
        #[arg(long)]
        dims: Option<String>,
    },
    /// List the shipped example documents.
    Fixtures,
}

fn read_document(cli: &Cli) -> Result<String> {
    if let Some(name) = &cli.fixture {
        return fixtures::get(name).map(str::to_string).ok_or_else(|| {
            let known: Vec<&str> = fixtures::names().collect();
            anyhow!("unknown fixture {name:?}; known: {}", known.join(", "))
        });
    }
    if let Some(path) = &cli.input {
        return std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()));
    }
    let mut text = String::new();
    std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
    Ok(text)
}

fn run(cli: &Cli) -> Result<Option<Outcome>> {
    let command = match &cli.command {
        Command::Fixtures => {
            let mut out = std::io::stdout().lock();
            for name in fixtures::names() {
                let _ = writeln!(out, "{name}");
            }
            return Ok(None);
        }
        Command::Coherence { left, right, dims } => {
            let dims = dims.as_deref().map(jobs::parse_dims).transpose()?;
            return Ok(Some(jobs::coherence(left, right, dims.as_ref(), cli.field.unwrap_or(Field::Rational))?));
        }
        other => other,
    };
    let text = read_document(cli)?;
    if text.trim().is_empty() {
        bail!("empty document; pass --fixture, --input or a document on stdin");
    }
    let doc = jobs::load(&text, cli.field)?;
    let outcome = match command {
        Command::Validate => jobs::validate(&doc)?,
        Command::Reconstruct => jobs::reconstruct(&doc)?,
        Command::Lift => jobs::lift(&doc)?,
        Command::RhoTilde => jobs::rho_tilde(&doc)?,
        Command::Nat => jobs::nat(&doc)?,
        Command::Characters => jobs::characters(&doc)?,
        Command::Coherence { .. } | Command::Fixtures => unreachable!("handled above"),
    };
    Ok(Some(outcome))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(outcome)) => {
            let body = if cli.json { outcome.json_string() + "\n" } else { outcome.text.clone() };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
