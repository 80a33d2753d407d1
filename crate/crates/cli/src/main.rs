//! `finsemi` command-line front end.

mod commands;
mod text;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use finsemi::corpus::{DEFAULT_SEED, MAX_CENSUS_ORDER};
use finsemi::TheoremId;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_COUNTEREXAMPLE: u8 = 2;
pub const EXIT_SEVERE: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "finsemi",
    version,
    about = "Structure analysis for finite semirings given by Cayley tables"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampled corpus generation.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Suppress standard output; only the exit code and errors remain.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse an SMR file and check the semiring axioms.
    Validate { file: PathBuf },
    /// Classification, Green's relations, regularity profile and decompositions.
    Analyze { file: PathBuf },
    /// b-lattice and rectangular decompositions (both unless one is chosen).
    Decompose(DecomposeArgs),
    /// Rees matrix semirings.
    #[command(subcommand)]
    Rees(ReesCommand),
    /// Check the equivalence theorems on one semiring.
    Theorems {
        file: PathBuf,
        /// Restrict to these theorem ids (repeatable).
        #[arg(long, value_parser = parse_theorem)]
        only: Vec<TheoremId>,
    },
    /// Check every theorem on the census and the constructed corpus.
    Sweep(SweepArgs),
    /// Corpus utilities.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    pub file: PathBuf,
    #[arg(long, conflicts_with = "rectangular")]
    pub blattice: bool,
    #[arg(long)]
    pub rectangular: bool,
}

#[derive(Debug, Subcommand)]
pub enum ReesCommand {
    /// Build the semiring of a REES spec.
    Build { spec: PathBuf },
    /// Rees coordinates of a completely simple semiring.
    Coordinatize { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Largest census order to include.
    #[arg(long, default_value_t = MAX_CENSUS_ORDER)]
    pub max_order: usize,
    /// `all` or a comma-separated list of theorem ids.
    #[arg(long, default_value = "all", value_parser = parse_theorem_list)]
    pub theorems: TheoremList,
    /// Skip the constructed corpus.
    #[arg(long)]
    pub census_only: bool,
}

#[derive(Debug, Clone)]
pub struct TheoremList(pub Vec<TheoremId>);

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    /// Write named items, the census and the Rees corpus to a directory.
    Export {
        #[arg(long)]
        dir: PathBuf,
    },
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse()
        .map_err(|e: finsemi::theorems::UnknownTheorem| e.to_string())
}

fn parse_theorem_list(s: &str) -> Result<TheoremList, String> {
    if s == "all" {
        return Ok(TheoremList(TheoremId::ALL.to_vec()));
    }
    let mut ids = s
        .split(',')
        .map(|t| parse_theorem(t.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    ids.sort();
    ids.dedup();
    Ok(TheoremList(ids))
}

/// An input file as echoed in reports.
#[derive(Debug, Clone)]
pub struct Input {
    pub path: String,
    pub sha256: String,
}

/// What a command produced: an exit code, a structured result and its
/// text rendering.
pub struct Outcome {
    pub code: u8,
    pub result: Value,
    pub text: String,
}

/// A failure before a result exists.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    pub fn severe(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_SEVERE,
            message: message.into(),
        }
    }
}

/// Runs one invocation, writing to the given streams. Returns the exit code.
pub fn run(argv: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let echo: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let mut inputs = Vec::new();
    let outcome = {
        let mut sink = std::io::sink();
        let progress: &mut dyn Write = if cli.format == Format::Text && !cli.quiet {
            &mut *out
        } else {
            &mut sink
        };
        commands::dispatch(&cli, &mut inputs, progress)
    };
    let code = match &outcome {
        Ok(o) => o.code,
        Err(f) => f.code,
    };
    if let Err(f) = &outcome {
        let _ = writeln!(err, "error: {}", f.message);
    }
    if cli.quiet {
        return code;
    }
    let written = match (cli.format, outcome) {
        (Format::Text, Ok(o)) => write!(out, "{}", o.text),
        (Format::Text, Err(_)) => Ok(()),
        (Format::Json, result) => {
            let inputs: Vec<Value> = inputs
                .iter()
                .map(|i| json!({ "path": i.path, "sha256": i.sha256 }))
                .collect();
            let mut doc = json!({
                "command": echo,
                "inputs": inputs,
                "exit_code": code,
            });
            match result {
                Ok(o) => doc["result"] = o.result,
                Err(f) => doc["error"] = json!({ "message": f.message }),
            }
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&doc).expect("documents serialize")
            )
        }
    };
    if written.is_err() {
        return EXIT_SEVERE;
    }
    code
}

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(
        std::env::args_os().collect(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    );
    ExitCode::from(code)
}
