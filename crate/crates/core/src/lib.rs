//! Discovery of unknown repeating motifs in univariate time series.
//!
//! A motif is a subsequence that recurs, approximately, elsewhere in the
//! same series. This crate finds all of them, of any length, without being
//! told what to look for or how long it is:
//!
//! 1. The series is differenced (removing level and trend per step) and
//!    z-normalized, then compressed into a string of symbols: each window
//!    of `s` points becomes one letter of a small alphabet, chosen by
//!    comparing the window mean against equiprobable breakpoints of the
//!    standard normal distribution.
//! 2. A population of trackers, one per letter, then grows generation by
//!    generation. Each generation, every tracker is matched against the
//!    stage of candidate words of the current length; trackers matching
//!    fewer than two words are eliminated, and the survivors' matches are
//!    confirmed on the unnormalized difference series with a per-subset
//!    Euclidean distance test. Confirmed repeats are stored as motifs, and
//!    surviving trackers are extended by one symbol in every direction the
//!    first generation observed, hunting for longer structure.
//! 3. When the population dies out or words outgrow the series, the motif
//!    pool is streamlined: motifs wholly contained in longer ones are
//!    dropped and motifs repeating in lockstep are merged.
//!
//! The result is a catalog of motifs with exact occurrence positions,
//! per-run statistics, and quality/efficiency metrics for comparing
//! parameter choices.
//!
//! # Example
//!
//! ```
//! use motif_tracker::driver::{run, RunConfig};
//! use motif_tracker::motif::ThresholdSpec;
//! use motif_tracker::series::TimeSeries;
//! use motif_tracker::synthetic::embedded_motif_benchmark;
//!
//! // a 400-point walk with two 40-point patterns each planted twice
//! let bench = embedded_motif_benchmark(5);
//! let series = TimeSeries::new("demo", bench.series).unwrap();
//!
//! let config = RunConfig::new(10, 6, ThresholdSpec::Absolute(0.5)).unwrap();
//! let result = run(series, &config).unwrap();
//!
//! assert!(!result.catalog().is_empty());
//! for motif in result.catalog().motifs() {
//!     println!(
//!         "len {} at {:?} (max subset distance {:.3})",
//!         motif.length(),
//!         motif.occurrences(),
//!         motif.max_subset_distance()
//!     );
//! }
//! ```
//!
//! Positions are reported on the difference axis: an occurrence at `p`
//! with length `L` covers difference points `p .. p + L`, which is the
//! change from raw point `p` to raw point `p + L`.

pub mod analytics;
pub mod driver;
pub mod io;
pub mod motif;
pub mod oracle;
pub mod sax;
pub mod series;
pub mod stage;
pub mod synthetic;
pub mod tracker;

pub use analytics::{
    catalog_stats, compute_stats, motif_efficiency, motif_quality, sweep, AnalyticsError,
    RunStats, SweepRow,
};
pub use driver::{run, GenerationTrace, RunConfig, RunError, RunResult};
pub use motif::{
    confirm_motifs, subset_distance_ok, MatchThreshold, MemoryMotif, MotifCatalog, MotifError,
    ThresholdSpec,
};
pub use oracle::{brute_force_pairs, OracleError};
pub use sax::{
    build_symbol_matrix, gaussian_breakpoints, Alphabet, SaxError, SymbolMatrix, Word,
};
pub use series::{preprocess, PreprocessedSeries, SeriesError, TimeSeries};
pub use stage::{build_stage, StageMatrix};
pub use synthetic::{
    benchmark_with_length, embed_motifs, embedded_motif_benchmark, random_walk, snap_to_grid,
    Benchmark, PlantedMotif, Rng, SynthError,
};
pub use tracker::{MutationTemplate, Tracker, TrackerError, TrackerPopulation};
