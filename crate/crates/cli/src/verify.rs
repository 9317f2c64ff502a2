//! Randomized identity suites.
//!
//! Trial `t` of identity `k` draws its words from the sampler stream
//! `(k << 32) | t`, so each trial is reproducible on its own and trials can
//! run on any number of threads. Results are collected in trial order and the
//! report never mentions threads or timings.

use std::fmt::Write as _;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use stringtop_core::bialgebra::{CountingRule, StringOperators};
use stringtop_core::sampling::WordSampler;
use stringtop_core::words::{Combo, CyclicWord, Letter, TensorCombo2};

use crate::{CliError, Surface, SurfaceInfo, SCHEMA};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum IdentityArg {
    /// `[x,y] + [y,x] = 0` and `s₂(x) + swap s₂(x) = 0`.
    Antisym,
    Jacobi,
    Cojacobi,
    Drinfeld,
    /// `e = bracket ∘ cobracket = 0`.
    Involutive,
    All,
}

/// Deliberately broken operators for checking that the harness notices.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Mutant {
    /// Count a crossing at every vertex of a shared path.
    Overcount,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Identity {
    Antisym,
    Jacobi,
    Cojacobi,
    Drinfeld,
    Involutive,
}

impl Identity {
    const ALL: [Identity; 5] =
        [Identity::Antisym, Identity::Jacobi, Identity::Cojacobi, Identity::Drinfeld, Identity::Involutive];

    fn name(self) -> &'static str {
        match self {
            Identity::Antisym => "antisym",
            Identity::Jacobi => "jacobi",
            Identity::Cojacobi => "cojacobi",
            Identity::Drinfeld => "drinfeld",
            Identity::Involutive => "involutive",
        }
    }

    fn arity(self) -> usize {
        match self {
            Identity::Antisym | Identity::Drinfeld => 2,
            Identity::Jacobi => 3,
            Identity::Cojacobi | Identity::Involutive => 1,
        }
    }

    fn stream_base(self) -> u64 {
        (Identity::ALL.iter().position(|&i| i == self).unwrap() as u64 + 1) << 32
    }

    /// Rendered defect, `None` when it vanishes.
    fn defect(self, ops: &StringOperators, words: &[CyclicWord]) -> Option<String> {
        let c: Vec<Combo> = words.iter().cloned().map(Combo::basis).collect();
        let rendered = match self {
            Identity::Antisym => {
                let b = ops.antisymmetry_defect(&c[0], &c[1]);
                let s = ops.coantisymmetry_defect(&c[0]);
                if b.is_zero() && s.is_zero() {
                    return None;
                }
                format!("bracket: {b}; cobracket: {s}")
            }
            Identity::Jacobi => nonzero(ops.jacobi_defect(&c[0], &c[1], &c[2]))?,
            Identity::Cojacobi => nonzero(ops.cojacobi_defect(&c[0]))?,
            Identity::Drinfeld => nonzero(ops.drinfeld_defect(&c[0], &c[1]))?,
            Identity::Involutive => nonzero(ops.e_operator(&c[0]))?,
        };
        Some(rendered)
    }
}

fn nonzero<B: stringtop_core::words::Basis>(c: stringtop_core::words::LinComb<B>) -> Option<String> {
    (!c.is_zero()).then(|| c.to_string())
}

impl IdentityArg {
    fn identities(self) -> Vec<Identity> {
        match self {
            IdentityArg::Antisym => vec![Identity::Antisym],
            IdentityArg::Jacobi => vec![Identity::Jacobi],
            IdentityArg::Cojacobi => vec![Identity::Cojacobi],
            IdentityArg::Drinfeld => vec![Identity::Drinfeld],
            IdentityArg::Involutive => vec![Identity::Involutive],
            IdentityArg::All => Identity::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub identity: IdentityArg,
    pub seed: u64,
    pub trials: usize,
    pub max_len: usize,
    /// 0 means one per core.
    pub threads: usize,
    pub mutant: Option<Mutant>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub words: Vec<String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub arity: usize,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<TrialRecord>,
    pub results: Vec<TrialRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BracketWitness {
    pub words: [String; 2],
    pub value: Combo,
}

#[derive(Clone, Debug, Serialize)]
pub struct CobracketWitness {
    pub word: String,
    pub value: TensorCombo2,
}

/// Nonzero values found by a seeded search, showing the operators are not
/// identically zero on this surface.
#[derive(Clone, Debug, Serialize)]
pub struct Witnesses {
    pub search_max_len: usize,
    pub search_limit: usize,
    pub bracket: Option<BracketWitness>,
    pub cobracket: Option<CobracketWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub command: &'static str,
    pub surface: SurfaceInfo,
    pub seed: u64,
    pub trials: usize,
    pub max_len: usize,
    pub counting_rule: &'static str,
    pub identities: Vec<IdentityReport>,
    pub witnesses: Witnesses,
    pub all_passed: bool,
}

pub const WITNESS_MAX_LEN: usize = 8;
pub const WITNESS_LIMIT: usize = 4096;
const WITNESS_STREAM: u64 = 0xFFFF << 32;

fn find_witnesses(ops: &StringOperators, seed: u64) -> Witnesses {
    let rank = ops.rose().rank();
    let mut cobracket = None;
    // Generator pairs first, so the simplest witness is reported when it exists.
    let mut bracket = (0..rank as u16).flat_map(|k| (k + 1..rank as u16).map(move |l| (k, l))).find_map(|(k, l)| {
        let x = CyclicWord::from_letters([Letter::generator(k)]);
        let y = CyclicWord::from_letters([Letter::generator(l)]);
        let value = ops.bracket_words(&x, &y);
        (!value.is_zero()).then(|| BracketWitness { words: [x.to_string(), y.to_string()], value })
    });
    for k in 0..WITNESS_LIMIT as u64 {
        if bracket.is_some() && cobracket.is_some() {
            break;
        }
        let mut sampler = WordSampler::new(seed, WITNESS_STREAM | k, rank, WITNESS_MAX_LEN);
        let [x, y] = sampler.words::<2>();
        if bracket.is_none() {
            let value = ops.bracket_words(&x, &y);
            if !value.is_zero() {
                bracket = Some(BracketWitness { words: [x.to_string(), y.to_string()], value });
            }
        }
        if cobracket.is_none() {
            let value = ops.cobracket_word(&x);
            if !value.is_zero() {
                cobracket = Some(CobracketWitness { word: x.to_string(), value });
            }
        }
    }
    Witnesses { search_max_len: WITNESS_MAX_LEN, search_limit: WITNESS_LIMIT, bracket, cobracket }
}

pub fn run_verify(surface: &Surface, config: &VerifyConfig) -> Result<VerifyReport, CliError> {
    let rose = &surface.rose;
    if rose.rank() == 0 {
        return Err(CliError::Usage(format!("surface {} has no nontrivial classes", surface.name)));
    }
    if config.trials == 0 || config.max_len == 0 {
        return Err(CliError::Usage("--trials and --max-len must be at least 1".into()));
    }
    let rule = match config.mutant {
        None => CountingRule::CanonicalVertex,
        Some(Mutant::Overcount) => CountingRule::EveryVertex,
    };
    let ops = StringOperators::with_rule(rose, rule);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker threads: {e}")))?;

    let identities: Vec<IdentityReport> = config
        .identity
        .identities()
        .into_iter()
        .map(|identity| {
            let results: Vec<TrialRecord> = pool.install(|| {
                (0..config.trials)
                    .into_par_iter()
                    .map(|trial| {
                        let mut sampler = WordSampler::new(
                            config.seed,
                            identity.stream_base() | trial as u64,
                            rose.rank(),
                            config.max_len,
                        );
                        let words: Vec<CyclicWord> = (0..identity.arity()).map(|_| sampler.word()).collect();
                        let defect = identity.defect(&ops, &words);
                        TrialRecord {
                            trial,
                            words: words.iter().map(CyclicWord::to_string).collect(),
                            pass: defect.is_none(),
                            defect,
                        }
                    })
                    .collect()
            });
            let failed = results.iter().filter(|r| !r.pass).count();
            IdentityReport {
                identity: identity.name(),
                arity: identity.arity(),
                trials: config.trials,
                passed: config.trials - failed,
                failed,
                first_counterexample: results.iter().find(|r| !r.pass).cloned(),
                results,
            }
        })
        .collect();

    let all_passed = identities.iter().all(|r| r.failed == 0);
    Ok(VerifyReport {
        schema: SCHEMA,
        command: "verify",
        surface: surface.info(),
        seed: config.seed,
        trials: config.trials,
        max_len: config.max_len,
        counting_rule: match rule {
            CountingRule::CanonicalVertex => "canonical-vertex",
            CountingRule::EveryVertex => "every-vertex",
        },
        identities,
        witnesses: find_witnesses(&ops, config.seed),
        all_passed,
    })
}

impl VerifyReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "verify on {} ({}), seed {}, {} trials, max length {}",
            self.surface.name, self.surface.darts, self.seed, self.trials, self.max_len
        );
        if self.counting_rule != "canonical-vertex" {
            let _ = writeln!(out, "counting rule: {}", self.counting_rule);
        }
        for r in &self.identities {
            let _ = writeln!(out, "{}: {}/{} passed", r.identity, r.passed, r.trials);
            if let Some(c) = &r.first_counterexample {
                let _ = writeln!(out, "  first counterexample: trial {} words {}", c.trial, c.words.join(", "));
                let _ = writeln!(out, "  defect: {}", c.defect.as_deref().unwrap_or("0"));
            }
        }
        match &self.witnesses.bracket {
            Some(w) => {
                let _ = writeln!(out, "witness bracket: [{}, {}] = {}", w.words[0], w.words[1], w.value);
            }
            None => {
                let _ = writeln!(out, "witness bracket: none found");
            }
        }
        match &self.witnesses.cobracket {
            Some(w) => {
                let _ = writeln!(out, "witness cobracket: s2({}) = {}", w.word, w.value);
            }
            None => {
                let _ = writeln!(out, "witness cobracket: none found");
            }
        }
        let _ = writeln!(out, "result: {}", if self.all_passed { "pass" } else { "FAIL" });
        out
    }
}
