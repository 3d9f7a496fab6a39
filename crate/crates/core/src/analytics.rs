//! Run statistics and derived quality metrics.
//!
//! The eight counters C1..C8 summarize one run; quality (MQ) and
//! efficiency (ME) condense them into two comparable figures. All motif
//! positions and distances live on the difference axis, the same axis the
//! catalog reports occurrences on.

use crate::driver::{run, RunConfig, RunResult};
use crate::motif::MotifCatalog;
use crate::series::{population_std, TimeSeries};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AnalyticsError {
    #[error("mean intra-motif distance is zero, quality is undefined")]
    DegenerateDistance,
    #[error("measured runtime is zero, efficiency is undefined")]
    ZeroRuntime,
}

/// Summary counters of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    /// Motifs in the pool.
    #[serde(rename = "C1")]
    pub motif_count: usize,
    /// Occurrences summed over all motifs.
    #[serde(rename = "C2")]
    pub occurrence_count: usize,
    /// Mean motif length in points.
    #[serde(rename = "C3")]
    pub mean_length: f64,
    /// Standard deviation of motif lengths.
    #[serde(rename = "C4")]
    pub length_std: f64,
    /// Percentage of difference points covered by at least one occurrence.
    #[serde(rename = "C5")]
    pub coverage_percent: f64,
    /// Mean over motifs of the mean pairwise full-length Euclidean
    /// distance between occurrences.
    #[serde(rename = "C6")]
    pub mean_intra_distance: f64,
    /// Wall-clock runtime in milliseconds.
    #[serde(rename = "C7")]
    pub elapsed_ms: u64,
    /// Longest motif overlapping the reference window, when one is given.
    #[serde(rename = "C8")]
    pub longest_reference_motif: usize,
    #[serde(rename = "MQ")]
    pub quality: f64,
    #[serde(rename = "ME")]
    pub efficiency: f64,
}

/// Quality of a pool: occurrences times mean length per unit of mean
/// intra-motif distance. Larger is better.
pub fn motif_quality(
    occurrence_count: usize,
    mean_length: f64,
    mean_intra_distance: f64,
) -> Result<f64, AnalyticsError> {
    if occurrence_count == 0 {
        return Ok(0.0);
    }
    if mean_intra_distance == 0.0 {
        return Err(AnalyticsError::DegenerateDistance);
    }
    Ok(occurrence_count as f64 * mean_length / mean_intra_distance)
}

/// Efficiency of a run: coverage percentage per second of runtime.
pub fn motif_efficiency(coverage_percent: f64, elapsed_ms: u64) -> Result<f64, AnalyticsError> {
    if elapsed_ms == 0 {
        if coverage_percent == 0.0 {
            return Ok(0.0);
        }
        return Err(AnalyticsError::ZeroRuntime);
    }
    Ok(coverage_percent / (elapsed_ms as f64 / 1000.0))
}

/// Statistics for an arbitrary catalog over a difference series.
///
/// The degenerate corners collapse to zero instead of erroring: an empty
/// pool, a pool of exact repeats (zero mean distance) and an unmeasurably
/// fast run all yield zero MQ or ME. Use [`motif_quality`] and
/// [`motif_efficiency`] directly when those cases must be distinguished.
pub fn catalog_stats(
    catalog: &MotifCatalog,
    diff: &[f64],
    elapsed_ms: u64,
    reference_window: Option<(usize, usize)>,
) -> RunStats {
    let motifs = catalog.motifs();
    let motif_count = motifs.len();
    let occurrence_count: usize = motifs.iter().map(|m| m.occurrences().len()).sum();

    let lengths: Vec<f64> = motifs.iter().map(|m| m.length() as f64).collect();
    let mean_length = if motif_count == 0 {
        0.0
    } else {
        lengths.iter().sum::<f64>() / motif_count as f64
    };
    let length_std = if motif_count == 0 {
        0.0
    } else {
        population_std(&lengths)
    };

    let coverage_percent = if catalog.series_length() == 0 {
        0.0
    } else {
        100.0 * catalog.covered_points() as f64 / catalog.series_length() as f64
    };

    let mean_intra_distance = if motif_count == 0 {
        0.0
    } else {
        motifs
            .iter()
            .map(|m| {
                let occ = m.occurrences();
                let mut total = 0.0;
                let mut pairs = 0usize;
                for a in 0..occ.len() {
                    for b in a + 1..occ.len() {
                        let mut acc = 0.0;
                        for t in 0..m.length() {
                            let d = diff[occ[a] + t] - diff[occ[b] + t];
                            acc += d * d;
                        }
                        total += acc.sqrt();
                        pairs += 1;
                    }
                }
                total / pairs as f64
            })
            .sum::<f64>()
            / motif_count as f64
    };

    let longest_reference_motif = reference_window
        .map(|(from, to)| {
            motifs
                .iter()
                .filter(|m| {
                    m.occurrences()
                        .iter()
                        .any(|&o| o < to && o + m.length() > from)
                })
                .map(|m| m.length())
                .max()
                .unwrap_or(0)
        })
        .unwrap_or(0);

    let quality = if mean_intra_distance == 0.0 {
        0.0
    } else {
        motif_quality(occurrence_count, mean_length, mean_intra_distance).unwrap_or(0.0)
    };
    let efficiency = if elapsed_ms == 0 {
        0.0
    } else {
        motif_efficiency(coverage_percent, elapsed_ms).unwrap_or(0.0)
    };

    RunStats {
        motif_count,
        occurrence_count,
        mean_length,
        length_std,
        coverage_percent,
        mean_intra_distance,
        elapsed_ms,
        longest_reference_motif,
        quality,
        efficiency,
    }
}

/// Statistics of a finished run's streamlined pool.
pub fn compute_stats(result: &RunResult, reference_window: Option<(usize, usize)>) -> RunStats {
    catalog_stats(
        result.catalog(),
        result.pre().diff(),
        result.elapsed_ms(),
        reference_window,
    )
}

/// One grid point of a parameter sweep.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub config: RunConfig,
    pub stats: Option<RunStats>,
    pub error: Option<String>,
}

/// Run every configuration over the same series, in parallel, preserving
/// the order of `configs`. A failing configuration becomes a row carrying
/// the error text instead of aborting the sweep.
pub fn sweep(
    series: &TimeSeries,
    configs: &[RunConfig],
    reference_window: Option<(usize, usize)>,
) -> Vec<SweepRow> {
    configs
        .par_iter()
        .map(|config| match run(series.clone(), config) {
            Ok(result) => SweepRow {
                config: config.clone(),
                stats: Some(compute_stats(&result, reference_window)),
                error: None,
            },
            Err(e) => SweepRow {
                config: config.clone(),
                stats: None,
                error: Some(e.to_string()),
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motif::{MemoryMotif, ThresholdSpec};
    use crate::synthetic::random_walk;

    fn crafted_catalog() -> (MotifCatalog, Vec<f64>) {
        let mut diff = vec![0.0; 100];
        for t in 0..10 {
            diff[t] = t as f64 * 0.3;
            diff[20 + t] = t as f64 * 0.3; // exact repeat of A
        }
        for t in 0..20 {
            diff[40 + t] = 1.0 + t as f64 * 0.1;
            diff[70 + t] = 1.1 + t as f64 * 0.1; // B offset by 0.1 everywhere
        }
        let mut catalog = MotifCatalog::new(100);
        catalog.store(MemoryMotif::new("aa", 10, vec![0, 20], 0.0).unwrap());
        catalog.store(MemoryMotif::new("bbbb", 20, vec![40, 70], 0.2).unwrap());
        (catalog, diff)
    }

    #[test]
    fn counters_on_a_crafted_catalog() {
        let (catalog, diff) = crafted_catalog();
        let stats = catalog_stats(&catalog, &diff, 500, Some((35, 45)));
        assert_eq!(stats.motif_count, 2);
        assert_eq!(stats.occurrence_count, 4);
        assert!((stats.mean_length - 15.0).abs() < 1e-12);
        assert!((stats.length_std - 5.0).abs() < 1e-12);
        assert!((stats.coverage_percent - 60.0).abs() < 1e-12);
        // motif A distance 0, motif B distance sqrt(20 * 0.01)
        let expected_c6 = (0.0 + (20.0f64 * 0.01).sqrt()) / 2.0;
        assert!((stats.mean_intra_distance - expected_c6).abs() < 1e-12);
        assert_eq!(stats.elapsed_ms, 500);
        assert_eq!(stats.longest_reference_motif, 20);
        let expected_mq = 4.0 * 15.0 / expected_c6;
        assert!((stats.quality - expected_mq).abs() < 1e-9);
        assert!((stats.efficiency - 120.0).abs() < 1e-9);
    }

    #[test]
    fn reference_window_misses_mean_zero() {
        let (catalog, diff) = crafted_catalog();
        let stats = catalog_stats(&catalog, &diff, 500, Some((95, 99)));
        assert_eq!(stats.longest_reference_motif, 0);
        let stats = catalog_stats(&catalog, &diff, 500, None);
        assert_eq!(stats.longest_reference_motif, 0);
    }

    #[test]
    fn empty_catalog_collapses_to_zero() {
        let catalog = MotifCatalog::new(50);
        let stats = catalog_stats(&catalog, &[0.0; 50], 0, None);
        assert_eq!(stats.motif_count, 0);
        assert_eq!(stats.quality, 0.0);
        assert_eq!(stats.efficiency, 0.0);
    }

    #[test]
    fn quality_matches_reference_figures() {
        let mq = motif_quality(69, 10.3, 2.7).unwrap();
        assert!((mq - 263.2222222222222).abs() < 1e-10);
        assert_eq!(mq.round() as i64, 263);
        let mq = motif_quality(428, 12.2, 4.3).unwrap();
        assert_eq!(mq.round() as i64, 1214);
    }

    #[test]
    fn efficiency_matches_reference_figures() {
        let me = motif_efficiency(92.7, 127_173).unwrap();
        assert!((me - 92.7 / 127.173).abs() < 1e-12);
        assert!(((me * 10.0).round() / 10.0 - 0.7).abs() < 1e-12);
        let me = motif_efficiency(36.8, 20_710).unwrap();
        assert!((me - 1.7769).abs() < 1e-4);
    }

    #[test]
    fn strict_metrics_error_on_degenerate_input() {
        assert_eq!(
            motif_quality(4, 10.0, 0.0),
            Err(AnalyticsError::DegenerateDistance)
        );
        assert_eq!(motif_quality(0, 0.0, 0.0), Ok(0.0));
        assert_eq!(
            motif_efficiency(50.0, 0),
            Err(AnalyticsError::ZeroRuntime)
        );
        assert_eq!(motif_efficiency(0.0, 0), Ok(0.0));
    }

    #[test]
    fn sweep_preserves_order_and_captures_errors() {
        let series = TimeSeries::new("w", random_walk(120, 21).unwrap()).unwrap();
        let configs = vec![
            RunConfig::new(5, 4, ThresholdSpec::Absolute(0.5)).unwrap(),
            RunConfig::new(500, 4, ThresholdSpec::Absolute(0.5)).unwrap(),
            RunConfig::new(10, 6, ThresholdSpec::SigmaFraction(0.5)).unwrap(),
        ];
        let rows = sweep(&series, &configs, None);
        assert_eq!(rows.len(), 3);
        let lengths: Vec<usize> = rows.iter().map(|r| r.config.symbol_length()).collect();
        assert_eq!(lengths, vec![5, 500, 10]);
        assert!(rows[0].stats.is_some() && rows[0].error.is_none());
        assert!(rows[1].stats.is_none() && rows[1].error.is_some());
        assert!(rows[2].stats.is_some());
    }
}
