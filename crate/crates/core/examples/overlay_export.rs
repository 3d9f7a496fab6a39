//! Export a run as files: the catalog as JSON, the occurrences as CSV, and
//! an aligned overlay of the best motif's occurrences for plotting.
//!
//! Run with: cargo run --example overlay_export

use motif_tracker::analytics::compute_stats;
use motif_tracker::driver::{run, RunConfig};
use motif_tracker::io::{catalog_document, catalog_to_json, occurrence_csv, overlay_csv};
use motif_tracker::motif::ThresholdSpec;
use motif_tracker::series::TimeSeries;
use motif_tracker::synthetic::embedded_motif_benchmark;
use std::fs;

fn main() {
    let bench = embedded_motif_benchmark(5);
    let series = TimeSeries::new("benchmark", bench.series).unwrap();
    let config = RunConfig::new(10, 6, ThresholdSpec::Absolute(0.5)).unwrap();
    let result = run(series, &config).unwrap();

    let stats = compute_stats(&result, None);
    let doc = catalog_document(&result, &stats, None);

    let dir = std::env::temp_dir().join("motif_tracker_export");
    fs::create_dir_all(&dir).unwrap();

    let catalog_path = dir.join("catalog.json");
    fs::write(&catalog_path, catalog_to_json(&doc).unwrap()).unwrap();
    println!("catalog:     {}", catalog_path.display());

    let occurrences_path = dir.join("occurrences.csv");
    fs::write(&occurrences_path, occurrence_csv(&doc)).unwrap();
    println!("occurrences: {}", occurrences_path.display());

    // pick the longest motif and export its occurrences aligned at t = 0;
    // each column is one occurrence's difference values, ready to plot on
    // top of each other
    let best = doc
        .motifs
        .iter()
        .max_by_key(|m| (m.length, m.starts_diff.len()))
        .expect("the benchmark yields motifs");
    let overlay_path = dir.join(format!("overlay_motif_{}.csv", best.id));
    let overlay = overlay_csv(best, result.pre().diff()).unwrap();
    fs::write(&overlay_path, &overlay).unwrap();
    println!(
        "overlay:     {} (motif {} of length {} with {} occurrences)",
        overlay_path.display(),
        best.id,
        best.length,
        best.starts_diff.len()
    );

    println!("\nfirst overlay rows:");
    for line in overlay.lines().take(4) {
        println!("  {line}");
    }
}
