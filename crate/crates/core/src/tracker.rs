//! The evolving tracker population.
//!
//! A tracker is a symbol string hypothesizing a motif. Generation 1 starts
//! with one single-symbol tracker per alphabet letter; each later generation
//! keeps only stimulated trackers and grows the survivors by one symbol,
//! appending every letter of the mutation template captured at the end of
//! generation 1. Populations are values: every step returns a new one.

use crate::sax::Alphabet;
use crate::stage::StageMatrix;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum TrackerError {
    #[error("population at generation {population} matched against stage at generation {stage}")]
    GenerationMismatch { population: usize, stage: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tracker {
    symbols: String,
    match_count: usize,
}

impl Tracker {
    pub fn symbols(&self) -> &str {
        &self.symbols
    }

    pub fn match_count(&self) -> usize {
        self.match_count
    }
}

/// The tracker set of one generation, sorted by symbol string and free of
/// duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackerPopulation {
    trackers: Vec<Tracker>,
    generation: usize,
}

impl TrackerPopulation {
    /// One single-symbol tracker per alphabet letter, generation 1.
    pub fn init(alphabet: &Alphabet) -> Self {
        let trackers = alphabet
            .symbols()
            .map(|c| Tracker {
                symbols: c.to_string(),
                match_count: 0,
            })
            .collect();
        Self {
            trackers,
            generation: 1,
        }
    }

    pub fn generation(&self) -> usize {
        self.generation
    }

    pub fn len(&self) -> usize {
        self.trackers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trackers.is_empty()
    }

    pub fn trackers(&self) -> &[Tracker] {
        &self.trackers
    }

    /// Count how many stage words equal each tracker.
    pub fn match_against(&self, stage: &StageMatrix) -> Result<Self, TrackerError> {
        if self.generation != stage.generation() {
            return Err(TrackerError::GenerationMismatch {
                population: self.generation,
                stage: stage.generation(),
            });
        }
        let mut counts: HashMap<&str, usize> = HashMap::new();
        for word in stage.words() {
            *counts.entry(word.symbols.as_str()).or_insert(0) += 1;
        }
        let trackers = self
            .trackers
            .iter()
            .map(|t| Tracker {
                symbols: t.symbols.clone(),
                match_count: counts.get(t.symbols.as_str()).copied().unwrap_or(0),
            })
            .collect();
        Ok(Self {
            trackers,
            generation: self.generation,
        })
    }

    /// Keep trackers with at least `min_count` matches; survivors have their
    /// counts reset to zero.
    pub fn eliminate_unstimulated(&self, min_count: usize) -> Self {
        let trackers = self
            .trackers
            .iter()
            .filter(|t| t.match_count >= min_count)
            .map(|t| Tracker {
                symbols: t.symbols.clone(),
                match_count: 0,
            })
            .collect();
        Self {
            trackers,
            generation: self.generation,
        }
    }

    /// Replace every match count by whatever `stimulation` returns for the
    /// tracker, in sorted tracker order. The driver scores each tracker by
    /// its confirmed pairings; custom drivers can plug in any other scorer.
    pub fn with_stimulation(&self, mut stimulation: impl FnMut(&Tracker) -> usize) -> Self {
        let trackers = self
            .trackers
            .iter()
            .map(|t| Tracker {
                symbols: t.symbols.clone(),
                match_count: stimulation(t),
            })
            .collect();
        Self {
            trackers,
            generation: self.generation,
        }
    }

    /// Clone every survivor once per template symbol, appending that symbol.
    /// Parents are retired; the result is the next generation. Parent strings
    /// are unique and suffixes are unique, so no duplicates can appear and
    /// the new size is exactly `survivors * template size`.
    pub fn proliferate(&self, template: &MutationTemplate) -> Self {
        let mut trackers = Vec::with_capacity(self.trackers.len() * template.len());
        for parent in &self.trackers {
            for &c in template.symbols() {
                let mut symbols = String::with_capacity(parent.symbols.len() + 1);
                symbols.push_str(&parent.symbols);
                symbols.push(c);
                trackers.push(Tracker {
                    symbols,
                    match_count: 0,
                });
            }
        }
        trackers.sort_by(|a, b| a.symbols.cmp(&b.symbols));
        Self {
            trackers,
            generation: self.generation + 1,
        }
    }
}

/// The alphabet-ordered symbols of the generation-1 survivors. Only symbols
/// seen to repeat are worth appending during proliferation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationTemplate {
    symbols: Vec<char>,
}

impl MutationTemplate {
    /// Capture from a generation-1 population after its eliminations.
    pub fn capture(population: &TrackerPopulation) -> Self {
        debug_assert_eq!(population.generation(), 1);
        let mut symbols: Vec<char> = population
            .trackers
            .iter()
            .filter_map(|t| t.symbols.chars().next())
            .collect();
        symbols.sort_unstable();
        symbols.dedup();
        Self { symbols }
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}
