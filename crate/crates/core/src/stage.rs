//! Per-generation stage construction.
//!
//! Generation `g` sees the series as words of `g` symbols taken at stride
//! `s` from the symbol matrix, so a word starting at `i` covers the points
//! `[i, i + g*s)`. Before trackers are matched, trivially matching
//! neighbours are dropped: a candidate identical to the most recently kept
//! word is eliminated, but never more than `s - 1` in a row, so a long run
//! of one word keeps roughly every `s`-th occurrence and smooth regions do
//! not flood the population with self-matches.

use crate::sax::{SymbolMatrix, Word};

/// The candidate words of one generation, after trivial-match elimination.
#[derive(Debug, Clone, PartialEq)]
pub struct StageMatrix {
    generation: usize,
    symbol_length: usize,
    words: Vec<Word>,
    eliminated_count: usize,
}

impl StageMatrix {
    pub(crate) fn from_parts(
        generation: usize,
        symbol_length: usize,
        words: Vec<Word>,
        eliminated_count: usize,
    ) -> Self {
        Self {
            generation,
            symbol_length,
            words,
            eliminated_count,
        }
    }

    pub fn generation(&self) -> usize {
        self.generation
    }

    pub fn symbol_length(&self) -> usize {
        self.symbol_length
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Candidates dropped by trivial-match elimination.
    pub fn eliminated_count(&self) -> usize {
        self.eliminated_count
    }
}

/// Build the stage matrix for `generation`. When no candidate fits (the
/// generation has outgrown the series) the stage comes back empty and the
/// caller treats that as termination.
pub fn build_stage(matrix: &SymbolMatrix, generation: usize) -> StageMatrix {
    assert!(generation >= 1, "generations are counted from 1");
    let s = matrix.window();
    let count = matrix.len();
    let span = (generation - 1) * s;

    let mut words: Vec<Word> = Vec::new();
    let mut eliminated = 0usize;
    let mut last_kept: Option<usize> = None; // index into words
    let mut run_eliminations = 0usize;

    let mut start = 0usize;
    while start + span < count {
        let mut symbols = String::with_capacity(generation);
        for k in 0..generation {
            symbols.push(matrix.symbol(start + k * s));
        }
        let trivial = last_kept
            .map(|i| words[i].symbols == symbols)
            .unwrap_or(false);
        if trivial && run_eliminations < s - 1 {
            eliminated += 1;
            run_eliminations += 1;
        } else {
            words.push(Word {
                symbols,
                start,
                covered_length: generation * s,
            });
            last_kept = Some(words.len() - 1);
            run_eliminations = 0;
        }
        start += 1;
    }

    StageMatrix::from_parts(generation, s, words, eliminated)
}
