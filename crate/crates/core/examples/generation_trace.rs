//! Watch the tracker population evolve: stage sizes, eliminations and
//! confirmations per generation.
//!
//! Run with: cargo run --example generation_trace

use motif_tracker::driver::{run, RunConfig};
use motif_tracker::motif::ThresholdSpec;
use motif_tracker::series::TimeSeries;
use motif_tracker::synthetic::embedded_motif_benchmark;

fn main() {
    let bench = embedded_motif_benchmark(5);
    let series = TimeSeries::new("benchmark", bench.series).unwrap();
    let config = RunConfig::new(10, 6, ThresholdSpec::Absolute(0.5)).unwrap();
    let result = run(series, &config).unwrap();

    println!("gen | stage words | dropped | trackers in -> matched -> confirmed | pairings | new motifs");
    println!("----+-------------+---------+-------------------------------------+----------+-----------");
    for t in result.trace() {
        println!(
            "{:>3} | {:>11} | {:>7} | {:>11} -> {:>7} -> {:>9} | {:>8} | {:>10}",
            t.generation,
            t.stage_words,
            t.stage_eliminated,
            t.trackers_in,
            t.trackers_matched,
            t.trackers_confirmed,
            t.pairings,
            t.new_motifs
        );
    }

    println!(
        "\nthe run stopped after generation {}: {}",
        result.generations_run(),
        if result
            .trace()
            .last()
            .map(|t| t.trackers_confirmed == 0)
            .unwrap_or(true)
        {
            "no tracker survived confirmation"
        } else {
            "words outgrew the series or the cap was reached"
        }
    );
    println!(
        "{} motifs before streamlining, {} after",
        result.raw_catalog().len(),
        result.catalog().len()
    );
}
