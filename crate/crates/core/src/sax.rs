//! Symbolic form of the normalized difference series.
//!
//! Every sliding window of `s` normalized points is reduced to its mean and
//! bucketed against breakpoints that cut the standard normal density into
//! equal-probability regions, giving one lowercase symbol per window start.
//! Two windows with the same symbol are cheap candidates for a real
//! (Euclidean) comparison later.

use crate::series::PreprocessedSeries;
use thiserror::Error;

pub const MIN_ALPHABET: usize = 2;
pub const MAX_ALPHABET: usize = 26;

#[derive(Debug, Error, PartialEq)]
pub enum SaxError {
    #[error("alphabet size {size} outside supported range {MIN_ALPHABET}..={MAX_ALPHABET}")]
    AlphabetOutOfRange { size: usize },
    #[error("window [{start}, {end}) out of bounds for {len} points")]
    WindowOutOfBounds { start: usize, end: usize, len: usize },
    #[error("symbol length must be at least 1")]
    ZeroSymbolLength,
    #[error("{len} normalized points cannot fit a window of {window}")]
    TooShortForWindow { len: usize, window: usize },
}

/// Quantile of the standard normal distribution.
///
/// Rational approximation in three regions (two tails and a central zone),
/// with absolute error well below 1e-6 everywhere; exact at p = 0.5.
pub fn inverse_normal_cdf(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "quantile argument must be in (0, 1)");

    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.383577518672690e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const P_LOW: f64 = 0.02425;

    if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -((((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0))
    }
}

/// The `size - 1` breakpoints cutting the standard normal density into
/// `size` equal-probability regions, in ascending order.
///
/// Mirrored around zero by construction so symmetry is exact.
pub fn gaussian_breakpoints(size: usize) -> Result<Vec<f64>, SaxError> {
    if !(MIN_ALPHABET..=MAX_ALPHABET).contains(&size) {
        return Err(SaxError::AlphabetOutOfRange { size });
    }
    let mut breakpoints = vec![0.0; size - 1];
    for k in 1..size {
        breakpoints[k - 1] = if 2 * k < size {
            inverse_normal_cdf(k as f64 / size as f64)
        } else if 2 * k == size {
            0.0
        } else {
            -inverse_normal_cdf((size - k) as f64 / size as f64)
        };
    }
    Ok(breakpoints)
}

/// An alphabet of `a` lowercase symbols with its breakpoints precomputed.
#[derive(Debug, Clone, PartialEq)]
pub struct Alphabet {
    breakpoints: Vec<f64>,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self, SaxError> {
        Ok(Self {
            breakpoints: gaussian_breakpoints(size)?,
        })
    }

    pub fn size(&self) -> usize {
        self.breakpoints.len() + 1
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn symbol(&self, index: usize) -> char {
        debug_assert!(index < self.size());
        (b'a' + index as u8) as char
    }

    /// All symbols in ascending order.
    pub fn symbols(&self) -> impl Iterator<Item = char> + '_ {
        (0..self.size()).map(|i| self.symbol(i))
    }
}

/// Mean of the window `norm[start..start + window]`.
pub fn window_mean(norm: &[f64], start: usize, window: usize) -> Result<f64, SaxError> {
    if window == 0 {
        return Err(SaxError::ZeroSymbolLength);
    }
    let end = start + window;
    if end > norm.len() {
        return Err(SaxError::WindowOutOfBounds {
            start,
            end,
            len: norm.len(),
        });
    }
    Ok(norm[start..end].iter().sum::<f64>() / window as f64)
}

/// Map a window mean to its symbol. A mean exactly on a breakpoint takes the
/// higher symbol, so the symbol index is the number of breakpoints <= mean.
pub fn symbolize(mean: f64, alphabet: &Alphabet) -> char {
    let index = alphabet.breakpoints().partition_point(|&b| b <= mean);
    alphabet.symbol(index)
}

/// Symbol word: a string of window symbols anchored at a start index on the
/// normalized difference axis, covering `covered_length` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub symbols: String,
    pub start: usize,
    pub covered_length: usize,
}

/// One symbol per window start over the whole normalized series. Entry `i`
/// is the symbol of the window starting at `i`; there are
/// `norm.len() - window + 1` of them.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolMatrix {
    symbols: Vec<char>,
    window: usize,
}

impl SymbolMatrix {
    #[cfg(test)]
    pub(crate) fn from_symbols(symbols: Vec<char>, window: usize) -> Self {
        Self { symbols, window }
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, start: usize) -> char {
        self.symbols[start]
    }

    /// The one-symbol words, in start order.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        self.symbols.iter().enumerate().map(|(start, &c)| Word {
            symbols: c.to_string(),
            start,
            covered_length: self.window,
        })
    }
}

/// Symbolize every window of the normalized series.
pub fn build_symbol_matrix(
    norm: &[f64],
    window: usize,
    alphabet: &Alphabet,
) -> Result<SymbolMatrix, SaxError> {
    if window == 0 {
        return Err(SaxError::ZeroSymbolLength);
    }
    if norm.len() < window {
        return Err(SaxError::TooShortForWindow {
            len: norm.len(),
            window,
        });
    }
    // each window is summed directly: a running sum would be O(n) instead
    // of O(n * window), but its accumulated rounding can flip a mean that
    // sits on a breakpoint to the other symbol
    let symbols = (0..=norm.len() - window)
        .map(|start| {
            let sum: f64 = norm[start..start + window].iter().sum();
            symbolize(sum / window as f64, alphabet)
        })
        .collect();
    Ok(SymbolMatrix { symbols, window })
}

/// Convenience wrapper reading the normalized values out of a preprocessed
/// series.
pub fn symbolize_series(
    pre: &PreprocessedSeries,
    window: usize,
    alphabet: &Alphabet,
) -> Result<SymbolMatrix, SaxError> {
    build_symbol_matrix(pre.norm(), window, alphabet)
}
