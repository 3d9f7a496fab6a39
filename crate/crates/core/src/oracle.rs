//! Brute-force reference computations used to cross-check discovery runs.
//!
//! The routines here deliberately avoid the production matching code: the
//! per-subset distance is recomputed inline from first principles, so a bug
//! in the fast path cannot hide in the reference path too.

use crate::motif::MatchThreshold;
use crate::series::PreprocessedSeries;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("motif length {length} is not a multiple of the symbol length {symbol_length}")]
    LengthNotMultiple { length: usize, symbol_length: usize },
    #[error("motif length {length} exceeds the {points} difference points")]
    TooLong { length: usize, points: usize },
}

/// Every non-overlapping start pair `(i, j)` whose aligned windows of
/// `length` difference points pass the per-subset distance test.
///
/// Pairs come back with `i < j`, ordered lexicographically. The scan is
/// quadratic in the number of windows and linear in `length`; it exists for
/// verification, not speed.
pub fn brute_force_pairs(
    pre: &PreprocessedSeries,
    length: usize,
    symbol_length: usize,
    thr: &MatchThreshold,
) -> Result<Vec<(usize, usize)>, OracleError> {
    if symbol_length == 0 || length == 0 || length % symbol_length != 0 {
        return Err(OracleError::LengthNotMultiple {
            length,
            symbol_length,
        });
    }
    let diff = pre.diff();
    if length > diff.len() {
        return Err(OracleError::TooLong {
            length,
            points: diff.len(),
        });
    }

    let subsets = length / symbol_length;
    let r = thr.r();
    let last_start = diff.len() - length;
    let mut pairs = Vec::new();

    for i in 0..=last_start {
        'candidate: for j in (i + length)..=last_start {
            for k in 0..subsets {
                let mut acc = 0.0f64;
                for t in 0..symbol_length {
                    let d = diff[i + k * symbol_length + t] - diff[j + k * symbol_length + t];
                    acc += d * d;
                }
                if acc.sqrt() > r {
                    continue 'candidate;
                }
            }
            pairs.push((i, j));
        }
    }
    Ok(pairs)
}
