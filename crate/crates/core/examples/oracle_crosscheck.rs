//! Cross-check a discovery run against an exhaustive scan: every
//! occurrence pair the run reports must also pass the brute-force distance
//! test, computed by an independent code path.
//!
//! Run with: cargo run --example oracle_crosscheck

use motif_tracker::driver::{run, RunConfig};
use motif_tracker::motif::{MatchThreshold, ThresholdSpec};
use motif_tracker::oracle::brute_force_pairs;
use motif_tracker::series::TimeSeries;
use motif_tracker::synthetic::random_walk;

fn main() {
    let symbol_length = 10;
    let d = 0.5;
    let series = TimeSeries::new("walk", random_walk(300, 42).unwrap()).unwrap();
    let config = RunConfig::new(symbol_length, 6, ThresholdSpec::Absolute(d)).unwrap();
    let result = run(series, &config).unwrap();
    let thr = MatchThreshold::new(d, symbol_length).unwrap();

    // the raw pool is checked: streamlining merges lockstep motifs, and a
    // merged length no longer corresponds to one generation's words
    let mut checked = 0usize;
    let mut violations = 0usize;
    for motif in result.raw_catalog().motifs() {
        let oracle = brute_force_pairs(result.pre(), motif.length(), symbol_length, &thr).unwrap();
        let occ = motif.occurrences();
        for a in 0..occ.len() {
            for b in a + 1..occ.len() {
                checked += 1;
                if !oracle.contains(&(occ[a], occ[b])) {
                    violations += 1;
                    println!(
                        "VIOLATION: pair ({}, {}) of motif {:?} fails the brute-force test",
                        occ[a],
                        occ[b],
                        motif.symbols()
                    );
                }
            }
        }
    }

    println!(
        "checked {} occurrence pairs from {} motifs against the oracle: {} violations",
        checked,
        result.raw_catalog().len(),
        violations
    );
    println!(
        "(the oracle also found {} matching window pairs in total; discovery reports \
         the subset that survives symbolization, staging and grouping)",
        brute_force_pairs(result.pre(), symbol_length, symbol_length, &thr)
            .unwrap()
            .len()
    );
}
