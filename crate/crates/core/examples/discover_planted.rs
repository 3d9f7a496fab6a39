//! Plant two motifs in a random walk, rediscover them, and compare the
//! catalog against the ground truth.
//!
//! Run with: cargo run --example discover_planted

use motif_tracker::driver::{run, RunConfig};
use motif_tracker::motif::ThresholdSpec;
use motif_tracker::series::TimeSeries;
use motif_tracker::synthetic::embedded_motif_benchmark;

fn main() {
    let bench = embedded_motif_benchmark(5);
    println!("series: {} points", bench.series.len());
    for (i, plant) in bench.plants.iter().enumerate() {
        println!(
            "planted motif {}: {} increments at difference positions {:?}",
            i,
            plant.len(),
            plant.positions()
        );
    }

    let series = TimeSeries::new("benchmark", bench.series).unwrap();
    let config = RunConfig::new(10, 6, ThresholdSpec::Absolute(0.5)).unwrap();
    let result = run(series, &config).unwrap();

    println!(
        "\ndiscovered {} motifs over {} generations ({} ms):",
        result.catalog().len(),
        result.generations_run(),
        result.elapsed_ms()
    );
    for (id, motif) in result.catalog().motifs().iter().enumerate() {
        println!(
            "  [{id}] length {:>3} at {:?} (worst subset distance {:.3})",
            motif.length(),
            motif.occurrences(),
            motif.max_subset_distance()
        );
    }

    // check the plants were recovered: some motif of at least the planted
    // length has occurrences within 10 points of every planted position
    for (i, plant) in bench.plants.iter().enumerate() {
        let hit = result.catalog().motifs().iter().find(|m| {
            m.length() >= plant.len()
                && plant
                    .positions()
                    .iter()
                    .all(|&p| m.occurrences().iter().any(|&o| o.abs_diff(p) <= 10))
        });
        match hit {
            Some(m) => println!(
                "plant {i} recovered by a motif of length {} at {:?}",
                m.length(),
                m.occurrences()
            ),
            None => println!("plant {i} was NOT recovered"),
        }
    }
}
