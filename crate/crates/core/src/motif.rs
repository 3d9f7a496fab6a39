//! Confirmed motifs and the memory pool they are stored in.
//!
//! Symbol equality is only a cheap filter; a motif is confirmed by comparing
//! the underlying subsequences of the unnormalized difference series,
//! symbol-subset by symbol-subset, against a Euclidean threshold. Each
//! subset of `s` points must individually pass, so one divergent stretch
//! cannot hide inside an otherwise good long match.

use crate::sax::Word;
use crate::series::PreprocessedSeries;
use crate::stage::StageMatrix;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MotifError {
    #[error("threshold must be non-negative, got {value}")]
    NegativeThreshold { value: f64 },
    #[error("symbol length must be at least 1")]
    ZeroSymbolLength,
    #[error("a motif needs at least 2 occurrences, got {count}")]
    TooFewOccurrences { count: usize },
    #[error("occurrence starts must increase by at least the motif length")]
    OverlappingOccurrences,
}

/// Per-point threshold `d` and the per-subset radius `r = d * s` that a
/// subset of `s` difference points must stay within.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchThreshold {
    per_point: f64,
    per_subset: f64,
}

impl MatchThreshold {
    pub fn new(per_point: f64, symbol_length: usize) -> Result<Self, MotifError> {
        if !(per_point >= 0.0) || !per_point.is_finite() {
            return Err(MotifError::NegativeThreshold { value: per_point });
        }
        if symbol_length == 0 {
            return Err(MotifError::ZeroSymbolLength);
        }
        Ok(Self {
            per_point,
            per_subset: per_point * symbol_length as f64,
        })
    }

    pub fn d(&self) -> f64 {
        self.per_point
    }

    pub fn r(&self) -> f64 {
        self.per_subset
    }
}

/// How the per-point threshold is specified: as an absolute value, or as a
/// fraction of the standard deviation of the difference series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "value", rename_all = "snake_case")]
pub enum ThresholdSpec {
    Absolute(f64),
    SigmaFraction(f64),
}

impl ThresholdSpec {
    pub fn resolve(
        &self,
        sigma_diff: f64,
        symbol_length: usize,
    ) -> Result<MatchThreshold, MotifError> {
        match *self {
            ThresholdSpec::Absolute(d) => MatchThreshold::new(d, symbol_length),
            ThresholdSpec::SigmaFraction(f) => {
                if !(f >= 0.0) || !f.is_finite() {
                    return Err(MotifError::NegativeThreshold { value: f });
                }
                MatchThreshold::new(f * sigma_diff, symbol_length)
            }
        }
    }
}

/// All per-subset distances between the windows at `x_start` and `y_start`,
/// if every one stays within `r`. Returns the largest accepted subset
/// distance; bails out at the first subset over the radius.
fn subset_distances_within(
    diff: &[f64],
    x_start: usize,
    y_start: usize,
    generation: usize,
    symbol_length: usize,
    r: f64,
) -> Option<f64> {
    let mut max_distance = 0.0f64;
    for k in 0..generation {
        let xo = x_start + k * symbol_length;
        let yo = y_start + k * symbol_length;
        let mut acc = 0.0;
        for t in 0..symbol_length {
            let d = diff[xo + t] - diff[yo + t];
            acc += d * d;
        }
        let distance = acc.sqrt();
        if distance > r {
            return None;
        }
        if distance > max_distance {
            max_distance = distance;
        }
    }
    Some(max_distance)
}

/// Whether the two windows match: the Euclidean distance of every aligned
/// `symbol_length`-point subset of the difference series is within the
/// radius. Both windows must lie inside `diff`.
pub fn subset_distance_ok(
    diff: &[f64],
    x_start: usize,
    y_start: usize,
    generation: usize,
    symbol_length: usize,
    thr: &MatchThreshold,
) -> bool {
    subset_distances_within(diff, x_start, y_start, generation, symbol_length, thr.r()).is_some()
}

/// A confirmed motif: where it repeats and how far apart the worst accepted
/// subset pair was.
#[derive(Debug, Clone, PartialEq)]
pub struct MemoryMotif {
    symbols: String,
    length: usize,
    occurrences: Vec<usize>,
    max_subset_distance: f64,
}

impl MemoryMotif {
    pub fn new(
        symbols: impl Into<String>,
        length: usize,
        occurrences: Vec<usize>,
        max_subset_distance: f64,
    ) -> Result<Self, MotifError> {
        if occurrences.len() < 2 {
            return Err(MotifError::TooFewOccurrences {
                count: occurrences.len(),
            });
        }
        if occurrences.windows(2).any(|w| w[1] < w[0] + length) {
            return Err(MotifError::OverlappingOccurrences);
        }
        Ok(Self {
            symbols: symbols.into(),
            length,
            occurrences,
            max_subset_distance,
        })
    }

    pub fn symbols(&self) -> &str {
        &self.symbols
    }

    /// Covered time points per occurrence.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Start indices on the difference axis, ascending.
    pub fn occurrences(&self) -> &[usize] {
        &self.occurrences
    }

    pub fn max_subset_distance(&self) -> f64 {
        self.max_subset_distance
    }

    fn same_entry(&self, other: &MemoryMotif) -> bool {
        self.symbols == other.symbols
            && self.length == other.length
            && self.occurrences == other.occurrences
    }
}

/// The memory pool of confirmed motifs for one series.
#[derive(Debug, Clone, PartialEq)]
pub struct MotifCatalog {
    /// Length of the axis occurrences live on (the difference series).
    series_length: usize,
    motifs: Vec<MemoryMotif>,
}

impl MotifCatalog {
    pub fn new(series_length: usize) -> Self {
        Self {
            series_length,
            motifs: Vec::new(),
        }
    }

    pub fn series_length(&self) -> usize {
        self.series_length
    }

    pub fn motifs(&self) -> &[MemoryMotif] {
        &self.motifs
    }

    pub fn len(&self) -> usize {
        self.motifs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.motifs.is_empty()
    }

    /// Add a motif unless an identical entry is already present. Returns
    /// whether it was added.
    pub fn store(&mut self, motif: MemoryMotif) -> bool {
        if self.motifs.iter().any(|m| m.same_entry(&motif)) {
            return false;
        }
        self.motifs.push(motif);
        true
    }

    /// Number of difference-axis points covered by at least one occurrence.
    pub fn covered_points(&self) -> usize {
        let mut intervals: Vec<(usize, usize)> = self
            .motifs
            .iter()
            .flat_map(|m| {
                m.occurrences
                    .iter()
                    .map(move |&o| (o, o + m.length))
            })
            .collect();
        intervals.sort_unstable();
        let mut covered = 0usize;
        let mut reach = 0usize;
        for (start, end) in intervals {
            let from = start.max(reach);
            if end > from {
                covered += end - from;
                reach = end;
            }
        }
        covered
    }

    /// Tidy the pool once the run is over.
    ///
    /// 1. Drop any motif whose occurrences all sit inside the occurrences of
    ///    a single longer motif repeating at least as often.
    /// 2. Merge motif pairs that repeat in lockstep (equal occurrence count,
    ///    constant start offset, overlapping by at least half the shorter
    ///    length) into one motif spanning the union of each aligned pair.
    ///    Two motifs only count as parts of one repeating pattern when the
    ///    union occurrences still pass the subset distance check and do not
    ///    overlap one another, so every motif in the result keeps the stored
    ///    motif guarantee.
    /// 3. Remove duplicates.
    ///
    /// The union of covered points never changes.
    pub fn streamline(
        &self,
        diff: &[f64],
        thr: &MatchThreshold,
        symbol_length: usize,
    ) -> MotifCatalog {
        let mut motifs = self.motifs.clone();
        sort_canonical(&mut motifs);

        // judged against the original pool: containment is transitive, so a
        // motif contained in a removed motif is still covered by whatever
        // survives
        let snapshot = motifs.clone();
        motifs.retain(|p| !snapshot.iter().any(|q| encapsulates(q, p)));

        loop {
            let mut merged = None;
            'scan: for i in 0..motifs.len() {
                for j in i + 1..motifs.len() {
                    if let Some(m) =
                        merge_lockstep(&motifs[i], &motifs[j], diff, thr, symbol_length)
                    {
                        merged = Some((i, j, m));
                        break 'scan;
                    }
                }
            }
            match merged {
                Some((i, j, m)) => {
                    motifs.remove(j);
                    motifs.remove(i);
                    motifs.push(m);
                    sort_canonical(&mut motifs);
                }
                None => break,
            }
        }

        motifs.dedup_by(|a, b| a.same_entry(b));
        MotifCatalog {
            series_length: self.series_length,
            motifs,
        }
    }
}

fn sort_canonical(motifs: &mut [MemoryMotif]) {
    motifs.sort_by(|a, b| {
        (a.occurrences[0], a.length, &a.symbols).cmp(&(b.occurrences[0], b.length, &b.symbols))
    });
}

/// Every occurrence interval of `p` lies inside some occurrence interval of
/// the strictly longer `q`, and `q` repeats at least as often.
fn encapsulates(q: &MemoryMotif, p: &MemoryMotif) -> bool {
    q.length > p.length
        && q.occurrences.len() >= p.occurrences.len()
        && p.occurrences.iter().all(|&po| {
            q.occurrences
                .iter()
                .any(|&qo| qo <= po && po + p.length <= qo + q.length)
        })
}

/// Merge two motifs that are offset views of one repeating pattern.
///
/// The parents guarantee their own spans only; the union realigns the
/// subset windows and adds points covered by a single parent, so the merged
/// occurrences are re-verified against the radius before the merge counts.
fn merge_lockstep(
    a: &MemoryMotif,
    b: &MemoryMotif,
    diff: &[f64],
    thr: &MatchThreshold,
    symbol_length: usize,
) -> Option<MemoryMotif> {
    if a.occurrences.len() != b.occurrences.len() || a.same_entry(b) {
        return None;
    }
    let offset = b.occurrences[0] as i64 - a.occurrences[0] as i64;
    let aligned = a
        .occurrences
        .iter()
        .zip(&b.occurrences)
        .all(|(&ao, &bo)| bo as i64 - ao as i64 == offset);
    if !aligned {
        return None;
    }
    let (a0, b0) = (a.occurrences[0] as i64, b.occurrences[0] as i64);
    let overlap = (a0 + a.length as i64).min(b0 + b.length as i64) - a0.max(b0);
    if 2 * overlap < a.length.min(b.length) as i64 {
        return None;
    }

    let starts: Vec<usize> = a
        .occurrences
        .iter()
        .zip(&b.occurrences)
        .map(|(&ao, &bo)| ao.min(bo))
        .collect();
    let merged_length = ((a0 + a.length as i64).max(b0 + b.length as i64) - a0.min(b0)) as usize;
    if starts.windows(2).any(|w| w[1] < w[0] + merged_length) {
        return None; // the union would make the occurrences overlap each other
    }

    // a merged occurrence keeps the stored motif guarantee over every full
    // subset of the union span, or the pair was never one pattern
    let generation = merged_length / symbol_length;
    let mut max_distance = 0.0f64;
    for i in 0..starts.len() {
        for j in i + 1..starts.len() {
            let within = subset_distances_within(
                diff,
                starts[i],
                starts[j],
                generation,
                symbol_length,
                thr.r(),
            )?;
            max_distance = max_distance.max(within);
        }
    }

    let symbols = if b.length > a.length {
        b.symbols.clone()
    } else {
        a.symbols.clone()
    };
    Some(MemoryMotif {
        symbols,
        length: merged_length,
        occurrences: starts,
        max_subset_distance: max_distance,
    })
}

/// Confirm which stage words carrying `tracker_symbols` are genuine repeats
/// and store the resulting motifs.
///
/// Matching words are scanned in time order. The earliest unclaimed word
/// pivots a group; a later unclaimed word joins if it keeps a full motif
/// length away from the group and passes the subset distance check against
/// every current member, so all occurrence pairs of a stored motif are
/// within the radius. Groups reaching `min_occurrences` become motifs.
///
/// Returns the stimulation for the tracker: the number of confirmed
/// pairings, one less than each stored group's size.
pub fn confirm_motifs(
    tracker_symbols: &str,
    stage: &StageMatrix,
    pre: &PreprocessedSeries,
    thr: &MatchThreshold,
    catalog: &mut MotifCatalog,
    min_occurrences: usize,
) -> usize {
    let generation = stage.generation();
    let symbol_length = stage.symbol_length();
    let length = generation * symbol_length;
    let diff = pre.diff();

    let candidates: Vec<&Word> = stage
        .words()
        .iter()
        .filter(|w| w.symbols == tracker_symbols)
        .collect();

    let mut claimed = vec![false; candidates.len()];
    let mut stimulation = 0usize;

    for pivot in 0..candidates.len() {
        if claimed[pivot] {
            continue;
        }
        claimed[pivot] = true;
        let mut members = vec![pivot];
        let mut max_distance = 0.0f64;

        for later in pivot + 1..candidates.len() {
            if claimed[later] {
                continue;
            }
            let start = candidates[later].start;
            let last_start = candidates[*members.last().unwrap()].start;
            if start < last_start + length {
                continue; // would overlap the group
            }
            let accepted = members.iter().try_fold(0.0f64, |acc, &m| {
                subset_distances_within(
                    diff,
                    candidates[m].start,
                    start,
                    generation,
                    symbol_length,
                    thr.r(),
                )
                .map(|d| acc.max(d))
            });
            if let Some(d) = accepted {
                members.push(later);
                claimed[later] = true;
                max_distance = max_distance.max(d);
            }
        }

        if members.len() >= min_occurrences {
            stimulation += members.len() - 1;
            let occurrences: Vec<usize> = members.iter().map(|&m| candidates[m].start).collect();
            let motif = MemoryMotif {
                symbols: tracker_symbols.to_string(),
                length,
                occurrences,
                max_subset_distance: max_distance,
            };
            catalog.store(motif);
        }
    }

    stimulation
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sax::Word;
    use crate::series::{preprocess, TimeSeries};
    use crate::stage::StageMatrix;

    fn pre_from_diff(diff: &[f64]) -> PreprocessedSeries {
        let mut raw = vec![0.0];
        for d in diff {
            raw.push(raw.last().unwrap() + d);
        }
        preprocess(TimeSeries::new("crafted", raw).unwrap()).unwrap()
    }

    fn stage_at(generation: usize, symbol_length: usize, starts: &[usize]) -> StageMatrix {
        let words = starts
            .iter()
            .map(|&start| Word {
                symbols: "c".repeat(generation),
                start,
                covered_length: generation * symbol_length,
            })
            .collect();
        StageMatrix::from_parts(generation, symbol_length, words, 0)
    }

    fn motif(symbols: &str, length: usize, occurrences: &[usize]) -> MemoryMotif {
        MemoryMotif::new(symbols, length, occurrences.to_vec(), 0.0).unwrap()
    }

    #[test]
    fn threshold_radius_is_per_point_times_length() {
        let thr = MatchThreshold::new(0.5, 10).unwrap();
        assert_eq!(thr.d(), 0.5);
        assert_eq!(thr.r(), 5.0);
        let thr = MatchThreshold::new(0.08, 5).unwrap();
        assert!((thr.r() - 0.4).abs() < 1e-12);
    }

    #[test]
    fn threshold_rejects_negative() {
        assert!(matches!(
            MatchThreshold::new(-0.1, 10),
            Err(MotifError::NegativeThreshold { .. })
        ));
        assert!(matches!(
            ThresholdSpec::SigmaFraction(-1.0).resolve(1.0, 10),
            Err(MotifError::NegativeThreshold { .. })
        ));
    }

    #[test]
    fn threshold_fraction_scales_by_sigma() {
        let thr = ThresholdSpec::SigmaFraction(0.15).resolve(2.0, 10).unwrap();
        assert!((thr.d() - 0.3).abs() < 1e-12);
        assert!((thr.r() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn subset_distance_examples() {
        let thr = MatchThreshold::new(0.5, 2).unwrap(); // r = 1.0
        let diff = [0.3, 0.4, 0.2, 0.1];
        // sqrt(0.01 + 0.09) ~ 0.316
        assert!(subset_distance_ok(&diff, 0, 2, 1, 2, &thr));
        let diff = [2.0, 0.0, 0.0, 0.0];
        // distance 2 > 1
        assert!(!subset_distance_ok(&diff, 0, 2, 1, 2, &thr));
    }

    #[test]
    fn subset_distance_boundary_is_inclusive() {
        let thr = MatchThreshold::new(1.0, 1).unwrap(); // r = 1.0
        let diff = [1.0, 2.0];
        assert!(subset_distance_ok(&diff, 0, 1, 1, 1, &thr));
    }

    #[test]
    fn every_subset_must_pass() {
        let thr = MatchThreshold::new(0.5, 2).unwrap(); // r = 1.0
        // first subsets equal, second subsets 2 apart
        let diff = [0.1, 0.1, 5.0, 5.0, 0.1, 0.1, 7.0, 7.0];
        assert!(!subset_distance_ok(&diff, 0, 4, 2, 2, &thr));
        // both subsets close
        let diff = [0.1, 0.1, 5.0, 5.0, 0.2, 0.2, 5.1, 5.1];
        assert!(subset_distance_ok(&diff, 0, 4, 2, 2, &thr));
    }

    #[test]
    fn confirm_groups_by_pivot_and_discards_loners() {
        let mut diff = vec![0.0; 202];
        diff[0] = 0.0;
        diff[1] = 0.1;
        diff[100] = 0.05;
        diff[101] = 0.15;
        diff[200] = 9.0;
        diff[201] = 9.0;
        let pre = pre_from_diff(&diff);
        let stage = stage_at(1, 2, &[0, 100, 200]);
        let thr = MatchThreshold::new(0.5, 2).unwrap();
        let mut catalog = MotifCatalog::new(diff.len());

        let stimulation = confirm_motifs("c", &stage, &pre, &thr, &mut catalog, 2);
        assert_eq!(stimulation, 1);
        assert_eq!(catalog.len(), 1);
        let m = &catalog.motifs()[0];
        assert_eq!(m.occurrences(), &[0, 100]);
        assert_eq!(m.length(), 2);
        assert!(m.max_subset_distance() > 0.0 && m.max_subset_distance() <= 1.0);
    }

    #[test]
    fn membership_is_checked_against_every_member() {
        // both A and B are within r of the pivot, but 1.4 apart from each
        // other, so B must not join
        let mut diff = vec![0.0; 110];
        diff[50] = 0.7;
        diff[100] = -0.7;
        diff[105] = 3.0; // variance filler
        let pre = pre_from_diff(&diff);
        let stage = stage_at(1, 2, &[0, 50, 100]);
        let thr = MatchThreshold::new(0.5, 2).unwrap();
        let mut catalog = MotifCatalog::new(diff.len());

        let stimulation = confirm_motifs("c", &stage, &pre, &thr, &mut catalog, 2);
        assert_eq!(stimulation, 1);
        assert_eq!(catalog.len(), 1);
        assert_eq!(catalog.motifs()[0].occurrences(), &[0, 50]);
    }

    #[test]
    fn group_of_three_counts_two_pairings() {
        let mut diff = vec![0.0; 110];
        diff[50] = 0.1;
        diff[100] = 0.2;
        diff[105] = 4.0;
        let pre = pre_from_diff(&diff);
        let stage = stage_at(1, 2, &[0, 50, 100]);
        let thr = MatchThreshold::new(0.5, 2).unwrap();
        let mut catalog = MotifCatalog::new(diff.len());

        let stimulation = confirm_motifs("c", &stage, &pre, &thr, &mut catalog, 2);
        assert_eq!(stimulation, 2);
        assert_eq!(catalog.len(), 1);
        assert_eq!(catalog.motifs()[0].occurrences(), &[0, 50, 100]);
    }

    #[test]
    fn overlapping_words_never_pair() {
        let diff = vec![0.3, 0.3, 0.3, 0.3, 5.0, -2.0];
        let pre = pre_from_diff(&diff);
        let thr = MatchThreshold::new(0.5, 2).unwrap();

        // starts 0 and 1: identical values but one point apart
        let stage = stage_at(1, 2, &[0, 1]);
        let mut catalog = MotifCatalog::new(diff.len());
        assert_eq!(confirm_motifs("c", &stage, &pre, &thr, &mut catalog, 2), 0);
        assert!(catalog.is_empty());

        // starts 0 and 2: exactly one motif length apart
        let stage = stage_at(1, 2, &[0, 2]);
        let mut catalog = MotifCatalog::new(diff.len());
        assert_eq!(confirm_motifs("c", &stage, &pre, &thr, &mut catalog, 2), 1);
        assert_eq!(catalog.motifs()[0].occurrences(), &[0, 2]);
    }

    #[test]
    fn store_skips_duplicates() {
        let mut catalog = MotifCatalog::new(100);
        assert!(catalog.store(motif("ab", 4, &[0, 10])));
        assert!(!catalog.store(motif("ab", 4, &[0, 10])));
        assert!(catalog.store(motif("ab", 4, &[0, 20])));
        assert_eq!(catalog.len(), 2);
    }

    #[test]
    fn motif_validation() {
        assert!(matches!(
            MemoryMotif::new("a", 2, vec![0], 0.0),
            Err(MotifError::TooFewOccurrences { count: 1 })
        ));
        assert!(matches!(
            MemoryMotif::new("a", 5, vec![0, 3], 0.0),
            Err(MotifError::OverlappingOccurrences)
        ));
    }

    /// A flat difference series: every subset distance is zero, so the
    /// geometric merge rules are exercised in isolation.
    fn flat_streamline(catalog: &MotifCatalog, symbol_length: usize) -> MotifCatalog {
        let diff = vec![0.0; catalog.series_length()];
        let thr = MatchThreshold::new(0.5, symbol_length).unwrap();
        catalog.streamline(&diff, &thr, symbol_length)
    }

    #[test]
    fn streamline_removes_encapsulated_motifs() {
        let mut catalog = MotifCatalog::new(100);
        catalog.store(motif("ab", 10, &[10, 50]));
        catalog.store(motif("wxyz", 20, &[5, 45]));
        let out = flat_streamline(&catalog, 5);
        assert_eq!(out.len(), 1);
        assert_eq!(out.motifs()[0].symbols(), "wxyz");
        assert_eq!(out.covered_points(), catalog.covered_points());
    }

    #[test]
    fn streamline_keeps_motif_with_more_repeats_than_container() {
        let mut catalog = MotifCatalog::new(200);
        // short motif repeats three times, long one only twice
        catalog.store(motif("a", 10, &[10, 50, 110]));
        catalog.store(motif("ab", 20, &[5, 45]));
        let out = flat_streamline(&catalog, 10);
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn streamline_merges_lockstep_pair() {
        let mut catalog = MotifCatalog::new(400);
        catalog.store(motif("aa", 10, &[100, 300]));
        catalog.store(motif("bb", 10, &[105, 305]));
        let out = flat_streamline(&catalog, 10);
        assert_eq!(out.len(), 1);
        let m = &out.motifs()[0];
        assert_eq!(m.length(), 15);
        assert_eq!(m.occurrences(), &[100, 300]);
        assert_eq!(out.covered_points(), catalog.covered_points());
    }

    #[test]
    fn streamline_skips_merge_below_half_overlap() {
        let mut catalog = MotifCatalog::new(400);
        catalog.store(motif("aa", 10, &[100, 300]));
        catalog.store(motif("bb", 10, &[106, 306])); // overlap 4 < 5
        let out = flat_streamline(&catalog, 10);
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn streamline_skips_merge_that_would_overlap_itself() {
        let mut catalog = MotifCatalog::new(100);
        // merging would give length 15 at starts {0, 12}, which overlap
        catalog.store(motif("aa", 10, &[0, 12]));
        catalog.store(motif("bb", 10, &[5, 17]));
        let out = flat_streamline(&catalog, 10);
        assert_eq!(out.len(), 2);
    }

    /// The union realigns the subset windows, so two individually valid
    /// motifs merge only when the union occurrences still pass the check.
    #[test]
    fn streamline_merge_requires_valid_union() {
        let symbol_length = 2;
        let thr = MatchThreshold::new(0.5, symbol_length).unwrap(); // r = 1
        let mut diff = vec![0.0; 110];
        for (i, v) in [1.0, 2.0, 3.0, 4.0, 5.0, 6.0].into_iter().enumerate() {
            diff[i] = v;
            diff[100 + i] = v;
        }
        // the second motif's tail disagrees by 0.9 per point: each of its
        // own subsets passes (distance 0.9), but the union's realigned
        // subset [6, 8) pairs both disagreements at once (distance ~1.27)
        diff[6] = 0.9;
        diff[7] = 0.9;

        let mut catalog = MotifCatalog::new(110);
        catalog.store(motif("abc", 6, &[0, 100]));
        catalog.store(motif("bcd", 6, &[3, 103]));
        let rejected = catalog.streamline(&diff, &thr, symbol_length);
        assert_eq!(rejected.len(), 2, "invalid union must not merge");

        // with the tail repeated exactly the same union is accepted
        diff[106] = 0.9;
        diff[107] = 0.9;
        let merged = catalog.streamline(&diff, &thr, symbol_length);
        assert_eq!(merged.len(), 1);
        assert_eq!(merged.motifs()[0].length(), 9);
        assert_eq!(merged.motifs()[0].occurrences(), &[0, 100]);
    }

    #[test]
    fn streamline_dedups() {
        let mut catalog = MotifCatalog::new(100);
        catalog.motifs.push(motif("ab", 4, &[0, 10]));
        catalog.motifs.push(motif("ab", 4, &[0, 10]));
        let out = flat_streamline(&catalog, 4);
        assert_eq!(out.len(), 1);
    }

    #[test]
    fn covered_points_unions_intervals() {
        let mut catalog = MotifCatalog::new(100);
        catalog.store(motif("a", 10, &[0, 20]));
        catalog.store(motif("b", 10, &[5, 40]));
        // [0,10) U [5,15) U [20,30) U [40,50) = 15 + 10 + 10
        assert_eq!(catalog.covered_points(), 35);
    }
}
