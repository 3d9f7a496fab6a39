//! The full discovery run: preprocessing, symbolization, and the
//! generation loop that grows trackers until the population or the stage
//! runs dry.

use crate::motif::{confirm_motifs, MotifCatalog, MotifError, ThresholdSpec};
use crate::sax::{build_symbol_matrix, Alphabet, SaxError, MAX_ALPHABET, MIN_ALPHABET};
use crate::series::{preprocess, PreprocessedSeries, SeriesError, TimeSeries};
use crate::stage::build_stage;
use crate::tracker::{MutationTemplate, TrackerError, TrackerPopulation};
use serde::{Deserialize, Serialize};
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Sax(#[from] SaxError),
    #[error(transparent)]
    Motif(#[from] MotifError),
    #[error(transparent)]
    Tracker(#[from] TrackerError),
    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },
}

/// Parameters of one discovery run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    symbol_length: usize,
    alphabet_size: usize,
    threshold: ThresholdSpec,
    max_generations: Option<usize>,
    min_occurrences: usize,
}

impl RunConfig {
    pub fn new(
        symbol_length: usize,
        alphabet_size: usize,
        threshold: ThresholdSpec,
    ) -> Result<Self, RunError> {
        if symbol_length == 0 {
            return Err(RunError::InvalidConfig {
                reason: "symbol length must be at least 1".into(),
            });
        }
        if !(MIN_ALPHABET..=MAX_ALPHABET).contains(&alphabet_size) {
            return Err(RunError::InvalidConfig {
                reason: format!(
                    "alphabet size must be between {MIN_ALPHABET} and {MAX_ALPHABET}, got {alphabet_size}"
                ),
            });
        }
        let raw = match threshold {
            ThresholdSpec::Absolute(v) | ThresholdSpec::SigmaFraction(v) => v,
        };
        if !raw.is_finite() || raw < 0.0 {
            return Err(RunError::InvalidConfig {
                reason: format!("threshold must be a non-negative finite number, got {raw}"),
            });
        }
        Ok(Self {
            symbol_length,
            alphabet_size,
            threshold,
            max_generations: None,
            min_occurrences: 2,
        })
    }

    /// Cap the number of generations; `None` lets the run continue until
    /// the stage empties.
    pub fn with_max_generations(mut self, cap: Option<usize>) -> Result<Self, RunError> {
        if cap == Some(0) {
            return Err(RunError::InvalidConfig {
                reason: "generation cap must be at least 1".into(),
            });
        }
        self.max_generations = cap;
        Ok(self)
    }

    pub fn with_min_occurrences(mut self, min: usize) -> Result<Self, RunError> {
        if min < 2 {
            return Err(RunError::InvalidConfig {
                reason: "a motif needs at least 2 occurrences".into(),
            });
        }
        self.min_occurrences = min;
        Ok(self)
    }

    pub fn symbol_length(&self) -> usize {
        self.symbol_length
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn threshold(&self) -> ThresholdSpec {
        self.threshold
    }

    pub fn max_generations(&self) -> Option<usize> {
        self.max_generations
    }

    pub fn min_occurrences(&self) -> usize {
        self.min_occurrences
    }
}

/// Per-generation counters recorded while the run executes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationTrace {
    pub generation: usize,
    /// Words kept on the stage after trivial-match elimination.
    pub stage_words: usize,
    /// Candidate words dropped as trivial matches.
    pub stage_eliminated: usize,
    /// Population size entering the generation.
    pub trackers_in: usize,
    /// Trackers left after the symbolic match-count elimination.
    pub trackers_matched: usize,
    /// Trackers left after the confirmation elimination.
    pub trackers_confirmed: usize,
    /// Confirmed pairings across all trackers this generation.
    pub pairings: usize,
    /// Motifs added to the pool this generation.
    pub new_motifs: usize,
}

/// Everything a discovery run produces.
#[derive(Debug)]
pub struct RunResult {
    pre: PreprocessedSeries,
    catalog: MotifCatalog,
    raw_catalog: MotifCatalog,
    generations_run: usize,
    elapsed_ms: u64,
    config: RunConfig,
    trace: Vec<GenerationTrace>,
}

impl RunResult {
    pub fn pre(&self) -> &PreprocessedSeries {
        &self.pre
    }

    /// The streamlined motif pool.
    pub fn catalog(&self) -> &MotifCatalog {
        &self.catalog
    }

    /// The pool as confirmed, before streamlining.
    pub fn raw_catalog(&self) -> &MotifCatalog {
        &self.raw_catalog
    }

    pub fn generations_run(&self) -> usize {
        self.generations_run
    }

    pub fn elapsed_ms(&self) -> u64 {
        self.elapsed_ms
    }

    pub fn config(&self) -> &RunConfig {
        &self.config
    }

    pub fn trace(&self) -> &[GenerationTrace] {
        &self.trace
    }
}

/// Run discovery over one series.
///
/// Each generation builds the stage of candidate words, drops trackers that
/// match fewer than `min_occurrences` words symbolically, confirms the rest
/// against the difference series, drops trackers with no confirmed pairing,
/// and extends the survivors with every symbol of the mutation template
/// captured at the end of the first generation. The loop stops when the
/// population or the stage empties, or at the generation cap.
pub fn run(series: TimeSeries, config: &RunConfig) -> Result<RunResult, RunError> {
    let started = Instant::now();
    let pre = preprocess(series)?;
    let alphabet = Alphabet::new(config.alphabet_size)?;
    let thr = config
        .threshold
        .resolve(pre.sigma_diff(), config.symbol_length)?;
    let matrix = build_symbol_matrix(pre.norm(), config.symbol_length, &alphabet)?;
    let generation_cap = config
        .max_generations
        .unwrap_or(pre.norm().len() / config.symbol_length);

    let mut population = TrackerPopulation::init(&alphabet);
    let mut catalog = MotifCatalog::new(pre.diff().len());
    let mut template: Option<MutationTemplate> = None;
    let mut trace = Vec::new();
    let mut generations_run = 0;

    for generation in 1..=generation_cap {
        let stage = build_stage(&matrix, generation);
        if stage.is_empty() {
            break;
        }
        generations_run = generation;

        let trackers_in = population.len();
        let matched = population.match_against(&stage)?;
        let after_match = matched.eliminate_unstimulated(config.min_occurrences);

        let mut pairings = 0usize;
        let motifs_before = catalog.len();
        let stimulated = after_match.with_stimulation(|t| {
            let s = confirm_motifs(
                t.symbols(),
                &stage,
                &pre,
                &thr,
                &mut catalog,
                config.min_occurrences,
            );
            pairings += s;
            s
        });
        let after_confirm = stimulated.eliminate_unstimulated(1);

        trace.push(GenerationTrace {
            generation,
            stage_words: stage.len(),
            stage_eliminated: stage.eliminated_count(),
            trackers_in,
            trackers_matched: after_match.len(),
            trackers_confirmed: after_confirm.len(),
            pairings,
            new_motifs: catalog.len() - motifs_before,
        });

        if generation == 1 {
            template = Some(MutationTemplate::capture(&after_confirm));
        }
        let template = template.as_ref().expect("template captured in generation 1");
        if after_confirm.is_empty() || template.is_empty() {
            break;
        }
        population = after_confirm.proliferate(template);
    }

    let elapsed_ms = started.elapsed().as_millis() as u64;
    let raw_catalog = catalog.clone();
    let catalog = catalog.streamline(pre.diff(), &thr, config.symbol_length());
    Ok(RunResult {
        pre,
        catalog,
        raw_catalog,
        generations_run,
        elapsed_ms,
        config: config.clone(),
        trace,
    })
}
