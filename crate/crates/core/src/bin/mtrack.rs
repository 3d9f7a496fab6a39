//! Command line front end: discover motifs, sweep parameters, generate
//! benchmark series, and export occurrence overlays.
//!
//! Exit codes: 0 on success, 2 for file problems, 3 for invalid arguments
//! or configurations, 4 for a series the pipeline cannot process
//! (non-finite values, constant differences, or too few points).

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use motif_tracker::analytics::{compute_stats, sweep};
use motif_tracker::driver::{run, RunConfig, RunError};
use motif_tracker::io::{
    catalog_document, catalog_from_json, catalog_to_json, occurrence_csv, overlay_csv,
    read_series_csv, sweep_to_csv, sweep_to_json, write_atomic, write_series_csv, IoError,
};
use motif_tracker::motif::ThresholdSpec;
use motif_tracker::sax::SaxError;
use motif_tracker::series::preprocess;
use motif_tracker::synthetic::benchmark_with_length;
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "mtrack",
    version,
    about = "Find unknown repeating motifs in a univariate time series",
    after_help = "Exit codes: 0 success, 2 file error, 3 invalid arguments, 4 unusable series."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run discovery over a CSV series and write the motif catalog
    Discover(DiscoverArgs),
    /// Run discovery across a parameter grid and tabulate the statistics
    Sweep(SweepArgs),
    /// Generate the seeded benchmark walk with planted motifs
    Synth(SynthArgs),
    /// Export the aligned occurrences of one cataloged motif
    Overlay(OverlayArgs),
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ThresholdMode {
    /// Threshold values are per-point distances
    Absolute,
    /// Threshold values are fractions of the difference-series deviation
    SigmaFraction,
}

#[derive(Parser)]
#[command(group = ArgGroup::new("thr").required(true))]
struct DiscoverArgs {
    /// CSV file with the series
    input: PathBuf,
    /// Points per symbol
    #[arg(long, short = 's', default_value_t = 10)]
    symbol_length: usize,
    /// Alphabet size (2 to 26)
    #[arg(long, short = 'a', default_value_t = 6)]
    alphabet: usize,
    /// Per-point distance threshold
    #[arg(long, group = "thr")]
    threshold: Option<f64>,
    /// Threshold as a fraction of the difference-series deviation
    #[arg(long, group = "thr")]
    threshold_frac: Option<f64>,
    /// Column to read: a header name or a 0-based index
    #[arg(long)]
    column: Option<String>,
    /// Stop after this many generations
    #[arg(long)]
    max_generations: Option<usize>,
    /// Minimum occurrences for a motif
    #[arg(long, default_value_t = 2)]
    min_occurrences: usize,
    /// Difference-axis window FROM:TO for the reference statistic C8
    #[arg(long, value_parser = parse_window)]
    reference_window: Option<(usize, usize)>,
    /// Write here instead of stdout
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    /// json: full catalog document; csv: one row per occurrence
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Parser)]
struct SweepArgs {
    /// CSV file with the series
    input: PathBuf,
    /// Column to read: a header name or a 0-based index
    #[arg(long)]
    column: Option<String>,
    /// Symbol lengths to try
    #[arg(long = "sweep-s", value_delimiter = ',', default_value = "10")]
    symbol_lengths: Vec<usize>,
    /// Alphabet sizes to try
    #[arg(long = "sweep-a", value_delimiter = ',', default_value = "6")]
    alphabets: Vec<usize>,
    /// Threshold values to try
    #[arg(long = "sweep-r", value_delimiter = ',', default_value = "0.5")]
    thresholds: Vec<f64>,
    /// How to interpret the threshold values
    #[arg(long, value_enum, default_value_t = ThresholdMode::Absolute)]
    threshold_mode: ThresholdMode,
    /// Difference-axis window FROM:TO for the reference statistic C8
    #[arg(long, value_parser = parse_window)]
    reference_window: Option<(usize, usize)>,
    /// Write here instead of stdout
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Parser)]
struct SynthArgs {
    /// Points in the generated series (at least 271)
    #[arg(long, default_value_t = 400)]
    length: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the series here instead of stdout
    #[arg(long)]
    output_series: Option<PathBuf>,
    /// Also write a JSON description of the planted motifs
    #[arg(long)]
    output_truth: Option<PathBuf>,
}

#[derive(Parser)]
struct OverlayArgs {
    /// Catalog JSON written by `discover`
    catalog: PathBuf,
    /// The series the catalog was computed from
    series: PathBuf,
    /// Motif id from the catalog
    #[arg(long)]
    motif: usize,
    /// Column to read: a header name or a 0-based index
    #[arg(long)]
    column: Option<String>,
    /// Write here instead of stdout
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

fn parse_window(text: &str) -> Result<(usize, usize), String> {
    let (from, to) = text
        .split_once(':')
        .ok_or_else(|| "expected FROM:TO".to_string())?;
    let from: usize = from
        .trim()
        .parse()
        .map_err(|_| format!("bad window start {from:?}"))?;
    let to: usize = to
        .trim()
        .parse()
        .map_err(|_| format!("bad window end {to:?}"))?;
    if from >= to {
        return Err(format!("window start {from} must be before end {to}"));
    }
    Ok((from, to))
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

fn io_failure(e: IoError) -> Failure {
    let code = match &e {
        IoError::ColumnNotFound { .. } | IoError::MotifNotFound { .. } | IoError::Mismatch { .. } => 3,
        IoError::Series(_) => 4,
        _ => 2,
    };
    Failure::new(code, e.to_string())
}

fn run_failure(e: RunError) -> Failure {
    let code = match &e {
        RunError::Series(_) => 4,
        RunError::Sax(SaxError::TooShortForWindow { .. }) => 4,
        _ => 3,
    };
    Failure::new(code, e.to_string())
}

fn emit(output: Option<&Path>, contents: &str) -> Result<(), Failure> {
    match output {
        Some(path) => write_atomic(path, contents).map_err(io_failure),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn discover(args: DiscoverArgs) -> Result<(), Failure> {
    let series = read_series_csv(&args.input, args.column.as_deref()).map_err(io_failure)?;
    let spec = match (args.threshold, args.threshold_frac) {
        (Some(d), None) => ThresholdSpec::Absolute(d),
        (None, Some(f)) => ThresholdSpec::SigmaFraction(f),
        _ => unreachable!("the argument group enforces exactly one"),
    };
    let config = RunConfig::new(args.symbol_length, args.alphabet, spec)
        .and_then(|c| c.with_max_generations(args.max_generations))
        .and_then(|c| c.with_min_occurrences(args.min_occurrences))
        .map_err(run_failure)?;

    let result = run(series, &config).map_err(run_failure)?;
    let stats = compute_stats(&result, args.reference_window);
    let doc = catalog_document(&result, &stats, args.reference_window);
    eprintln!(
        "{}: {} motifs, {} occurrences, {:.1}% coverage, {} generations, {} ms",
        doc.series.label,
        stats.motif_count,
        stats.occurrence_count,
        stats.coverage_percent,
        doc.generations_run,
        doc.elapsed_ms
    );
    let text = match args.format {
        OutputFormat::Json => catalog_to_json(&doc).map_err(io_failure)?,
        OutputFormat::Csv => occurrence_csv(&doc),
    };
    emit(args.output.as_deref(), &text)
}

fn sweep_command(args: SweepArgs) -> Result<(), Failure> {
    let series = read_series_csv(&args.input, args.column.as_deref()).map_err(io_failure)?;
    let mut configs = Vec::new();
    for &s in &args.symbol_lengths {
        for &a in &args.alphabets {
            for &r in &args.thresholds {
                let spec = match args.threshold_mode {
                    ThresholdMode::Absolute => ThresholdSpec::Absolute(r),
                    ThresholdMode::SigmaFraction => ThresholdSpec::SigmaFraction(r),
                };
                configs.push(RunConfig::new(s, a, spec).map_err(run_failure)?);
            }
        }
    }
    if configs.is_empty() {
        return Err(Failure::new(3, "the sweep grid is empty"));
    }
    let rows = sweep(&series, &configs, args.reference_window);
    let failures = rows.iter().filter(|r| r.error.is_some()).count();
    eprintln!(
        "{}: swept {} configurations ({} failed)",
        series.label(),
        rows.len(),
        failures
    );
    let text = match args.format {
        OutputFormat::Json => sweep_to_json(&rows).map_err(io_failure)?,
        OutputFormat::Csv => sweep_to_csv(&rows),
    };
    emit(args.output.as_deref(), &text)?;
    if failures == rows.len() {
        return Err(Failure::new(4, "every configuration in the sweep failed"));
    }
    Ok(())
}

#[derive(Serialize)]
struct TruthPlant<'a> {
    positions: &'a [usize],
    length: usize,
    pattern: &'a [f64],
}

#[derive(Serialize)]
struct TruthDocument<'a> {
    seed: u64,
    length: usize,
    /// Plant positions index the difference series, matching catalog starts.
    axis: &'static str,
    plants: Vec<TruthPlant<'a>>,
}

fn synth(args: SynthArgs) -> Result<(), Failure> {
    let bench =
        benchmark_with_length(args.seed, args.length).map_err(|e| Failure::new(3, e.to_string()))?;

    if let Some(path) = &args.output_truth {
        let doc = TruthDocument {
            seed: args.seed,
            length: args.length,
            axis: "diff",
            plants: bench
                .plants
                .iter()
                .map(|p| TruthPlant {
                    positions: p.positions(),
                    length: p.len(),
                    pattern: p.pattern(),
                })
                .collect(),
        };
        let mut text =
            serde_json::to_string_pretty(&doc).map_err(|e| Failure::new(2, e.to_string()))?;
        text.push('\n');
        write_atomic(path, &text).map_err(io_failure)?;
    }

    match &args.output_series {
        Some(path) => write_series_csv(path, &bench.series).map_err(io_failure),
        None => {
            for v in &bench.series {
                println!("{v}");
            }
            Ok(())
        }
    }
}

fn overlay(args: OverlayArgs) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&args.catalog)
        .map_err(|e| Failure::new(2, format!("{}: {e}", args.catalog.display())))?;
    let doc = catalog_from_json(&text).map_err(io_failure)?;
    let series = read_series_csv(&args.series, args.column.as_deref()).map_err(io_failure)?;
    let pre = preprocess(series).map_err(|e| Failure::new(4, e.to_string()))?;
    if pre.diff().len() != doc.series.diff_points {
        return Err(Failure::new(
            3,
            format!(
                "catalog was computed over {} difference points but the series has {}",
                doc.series.diff_points,
                pre.diff().len()
            ),
        ));
    }
    let motif = doc
        .motifs
        .iter()
        .find(|m| m.id == args.motif)
        .ok_or_else(|| io_failure(IoError::MotifNotFound { id: args.motif }))?;
    let text = overlay_csv(motif, pre.diff()).map_err(io_failure)?;
    emit(args.output.as_deref(), &text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Discover(args) => discover(args),
        Command::Sweep(args) => sweep_command(args),
        Command::Synth(args) => synth(args),
        Command::Overlay(args) => overlay(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
