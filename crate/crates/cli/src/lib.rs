//! Batch front end for the string operators: bracket and cobracket of words,
//! randomized identity suites, and chord-diagram summaries.
//!
//! Every command renders its whole report into a string, so the binary only
//! prints and exits; tests call [`run`] directly.

mod diagram;
mod verify;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use stringtop_core::bialgebra::{AlphabetMismatch, StringOperators};
use stringtop_core::diagrams::DiagramError;
use stringtop_core::surface::{FatRose, SurfaceError, SurfacePreset};
use stringtop_core::words::{Combo, CyclicWord, WordError};

pub use verify::{run_verify, IdentityArg, Mutant, VerifyConfig, VerifyReport};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Word(#[from] WordError),
    #[error("{0}")]
    Surface(#[from] SurfaceError),
    #[error("{0}")]
    Alphabet(#[from] AlphabetMismatch),
    #[error("{0}")]
    Diagram(#[from] DiagramError),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Input errors exit with 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Debug, Parser)]
#[command(name = "stringtop", version, about = "Goldman bracket, Turaev cobracket and chord-diagram surgery")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Goldman bracket of two cyclic words.
    Bracket {
        #[command(flatten)]
        surface: SurfaceArgs,
        first: String,
        second: String,
        #[arg(long)]
        json: bool,
    },
    /// Turaev cobracket of a cyclic word.
    Cobracket {
        #[command(flatten)]
        surface: SurfaceArgs,
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Seeded randomized checks of the Lie bialgebra identities.
    Verify {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(value_enum)]
        identity: IdentityArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        max_len: u64,
        /// Worker threads; 0 uses one per core. Reports do not depend on it.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Run against a deliberately broken crossing count.
        #[arg(long, value_enum)]
        mutant: Option<Mutant>,
        #[arg(long)]
        json: bool,
    },
    /// Surgery summary of a chord diagram.
    Diagram {
        /// Preset name, I..VII.
        #[arg(required_unless_present = "diagram_file", conflicts_with = "diagram_file")]
        preset: Option<String>,
        #[arg(long)]
        diagram_file: Option<PathBuf>,
        /// Arity of presets I and II.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Dimension used for the operator degree.
        #[arg(long, default_value_t = 2)]
        d: i64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SurfaceArgs {
    /// torus1, pants or g<g>b<b>.
    #[arg(long, default_value = "torus1", conflicts_with = "surface_file")]
    pub surface: String,
    /// File with one line of darts in counterclockwise order, e.g. `a b A B`.
    #[arg(long)]
    pub surface_file: Option<PathBuf>,
}

/// A resolved surface together with the name it was given by.
#[derive(Debug, Clone)]
pub struct Surface {
    pub name: String,
    pub rose: FatRose,
}

#[derive(Debug, Clone, Serialize)]
pub struct SurfaceInfo {
    pub name: String,
    pub darts: String,
    pub genus: u64,
    pub boundary_count: usize,
}

impl Surface {
    pub fn preset(name: &str) -> Result<Self, CliError> {
        let rose = FatRose::preset(name.parse::<SurfacePreset>()?)?;
        Ok(Surface { name: name.to_string(), rose })
    }

    pub fn resolve(args: &SurfaceArgs) -> Result<Self, CliError> {
        match &args.surface_file {
            Some(path) => {
                let text = read(path)?;
                Ok(Surface { name: path.display().to_string(), rose: FatRose::parse(text.trim())? })
            }
            None => Surface::preset(&args.surface),
        }
    }

    pub fn info(&self) -> SurfaceInfo {
        let inv = self.rose.invariants();
        SurfaceInfo {
            name: self.name.clone(),
            darts: self.rose.to_string(),
            genus: inv.genus,
            boundary_count: inv.boundary_count,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// What the binary prints and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn parse_word(text: &str, ops: &StringOperators) -> Result<CyclicWord, CliError> {
    let w = CyclicWord::parse(text)?;
    ops.check_word(&w)?;
    Ok(w)
}

#[derive(Serialize)]
struct BracketReport<'a> {
    schema: u32,
    command: &'static str,
    surface: SurfaceInfo,
    words: Vec<String>,
    result: &'a Combo,
}

#[derive(Serialize)]
struct CobracketReport<'a> {
    schema: u32,
    command: &'static str,
    surface: SurfaceInfo,
    word: String,
    result: &'a stringtop_core::words::TensorCombo2,
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Bracket { surface, first, second, json } => {
            let surface = Surface::resolve(surface)?;
            let ops = StringOperators::new(&surface.rose);
            let (x, y) = (parse_word(first, &ops)?, parse_word(second, &ops)?);
            let result = ops.bracket_words(&x, &y);
            Ok(Output::ok(if *json {
                to_json(&BracketReport {
                    schema: SCHEMA,
                    command: "bracket",
                    surface: surface.info(),
                    words: vec![x.to_string(), y.to_string()],
                    result: &result,
                })
            } else {
                format!("{result}\n")
            }))
        }
        Command::Cobracket { surface, word, json } => {
            let surface = Surface::resolve(surface)?;
            let ops = StringOperators::new(&surface.rose);
            let x = parse_word(word, &ops)?;
            let result = ops.cobracket_word(&x);
            Ok(Output::ok(if *json {
                to_json(&CobracketReport {
                    schema: SCHEMA,
                    command: "cobracket",
                    surface: surface.info(),
                    word: x.to_string(),
                    result: &result,
                })
            } else {
                format!("{result}\n")
            }))
        }
        Command::Verify { surface, identity, seed, trials, max_len, threads, mutant, json } => {
            let surface = Surface::resolve(surface)?;
            let config = VerifyConfig {
                identity: *identity,
                seed: *seed,
                trials: *trials as usize,
                max_len: *max_len as usize,
                threads: *threads,
                mutant: *mutant,
            };
            let report = run_verify(&surface, &config)?;
            let text = if *json { to_json(&report) } else { report.render() };
            Ok(Output { text, code: if report.all_passed { 0 } else { 1 } })
        }
        Command::Diagram { preset, diagram_file, n, d, json } => {
            let (name, diagram) = match (preset, diagram_file) {
                (_, Some(path)) => {
                    let text = read(path)?;
                    (path.display().to_string(), stringtop_core::diagrams::ChordDiagram::from_json(&text)?)
                }
                (Some(p), None) => {
                    let preset = stringtop_core::diagrams::DiagramPreset::parse(p, *n)?;
                    (preset.to_string(), preset.build()?)
                }
                (None, None) => return Err(CliError::Usage("a preset or --diagram-file is required".into())),
            };
            let report = diagram::summarize(&name, &diagram, *d);
            Ok(Output::ok(if *json { to_json(&report) } else { report.render() }))
        }
    }
}
