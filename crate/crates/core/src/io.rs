//! Reading series, and writing catalogs, sweeps and overlays.
//!
//! All writes go through an atomic temp-file-and-rename so a crashed run
//! never leaves a half-written document. JSON documents round every float
//! to 15 significant digits; together with the deterministic discovery
//! loop this makes re-running a configuration byte-identical up to the
//! timing fields.

use crate::analytics::{RunStats, SweepRow};
use crate::driver::{GenerationTrace, RunResult};
use crate::motif::ThresholdSpec;
use crate::series::{SeriesError, TimeSeries};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use thiserror::Error;

pub const CATALOG_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("column {column:?} not found; available columns: {available:?}")]
    ColumnNotFound {
        column: String,
        available: Vec<String>,
    },
    #[error("row {row} has no column {column}")]
    MissingField { row: usize, column: usize },
    #[error("could not parse {value:?} in row {row} as a number")]
    BadNumber { row: usize, value: String },
    #[error("no data rows in {path}")]
    NoData { path: String },
    #[error("motif {id} not found in the catalog")]
    MotifNotFound { id: usize },
    #[error("catalog does not fit the series: {reason}")]
    Mismatch { reason: String },
}

/// Round to 15 significant digits, enough to keep every meaningful digit
/// of an f64 while shaving off last-bit noise in serialized output.
fn round15(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.14e}").parse().expect("formatted float")
}

fn rounded_stats(stats: &RunStats) -> RunStats {
    RunStats {
        mean_length: round15(stats.mean_length),
        length_std: round15(stats.length_std),
        coverage_percent: round15(stats.coverage_percent),
        mean_intra_distance: round15(stats.mean_intra_distance),
        quality: round15(stats.quality),
        efficiency: round15(stats.efficiency),
        ..stats.clone()
    }
}

/// Read a numeric column from a CSV file.
///
/// `column` may be a 0-based index or a header name; without it the first
/// column is used. A header row is detected by the chosen cell of the
/// first row not parsing as a number; a named column always implies a
/// header row.
pub fn read_series_csv(path: &Path, column: Option<&str>) -> Result<TimeSeries, IoError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)?;
    let rows: Vec<csv::StringRecord> = reader.records().collect::<Result<_, _>>()?;
    let path_label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "series".to_string());
    if rows.is_empty() {
        return Err(IoError::NoData {
            path: path.display().to_string(),
        });
    }

    let (index, mut label, mut first_data_row) = match column {
        Some(spec) => match spec.parse::<usize>() {
            Ok(index) => (index, path_label.clone(), 0),
            Err(_) => {
                let header = &rows[0];
                let index = header.iter().position(|name| name == spec).ok_or_else(|| {
                    IoError::ColumnNotFound {
                        column: spec.to_string(),
                        available: header.iter().map(str::to_string).collect(),
                    }
                })?;
                (index, spec.to_string(), 1)
            }
        },
        None => (0, path_label.clone(), 0),
    };

    // auto-detect a header row when the column was not given by name
    if first_data_row == 0 {
        let cell = rows[0].get(index);
        if let Some(cell) = cell {
            if cell.parse::<f64>().is_err() {
                label = if cell.is_empty() {
                    path_label
                } else {
                    cell.to_string()
                };
                first_data_row = 1;
            }
        }
    }

    let mut values = Vec::with_capacity(rows.len());
    for (offset, row) in rows[first_data_row..].iter().enumerate() {
        let row_number = first_data_row + offset;
        let cell = row.get(index).ok_or(IoError::MissingField {
            row: row_number,
            column: index,
        })?;
        let value = cell.parse::<f64>().map_err(|_| IoError::BadNumber {
            row: row_number,
            value: cell.to_string(),
        })?;
        values.push(value);
    }
    if values.is_empty() {
        return Err(IoError::NoData {
            path: path.display().to_string(),
        });
    }
    Ok(TimeSeries::new(label, values)?)
}

/// Write a single headerless column of values.
pub fn write_series_csv(path: &Path, values: &[f64]) -> Result<(), IoError> {
    let mut out = String::new();
    for v in values {
        writeln!(out, "{v}").expect("write to string");
    }
    write_atomic(path, &out)
}

/// Write via a sibling temp file and rename, so the target is never left
/// half-written.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), IoError> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Series facts echoed into the catalog document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesInfo {
    pub label: String,
    /// Points in the raw series.
    pub points: usize,
    /// Points in the difference series, the axis occurrences live on.
    pub diff_points: usize,
    /// Standard deviation of the difference series.
    pub sigma_diff: f64,
}

/// Configuration echoed into the catalog document, with the threshold both
/// as specified and as resolved against the series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigInfo {
    pub symbol_length: usize,
    pub alphabet_size: usize,
    pub threshold: ThresholdSpec,
    /// Resolved per-point threshold `d`.
    pub resolved_d: f64,
    /// Resolved per-subset radius `r = d * symbol_length`.
    pub resolved_r: f64,
    pub max_generations: Option<usize>,
    pub min_occurrences: usize,
}

/// One motif in the document.
///
/// `starts_diff` indexes the difference series; the occurrence covers
/// difference points `start .. start + length`. `starts_raw` indexes the
/// raw series: the same occurrence spans the `length + 1` raw points
/// `start ..= start + length`, so both starts carry the same number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MotifRecord {
    pub id: usize,
    pub symbols: String,
    pub length: usize,
    pub starts_diff: Vec<usize>,
    pub starts_raw: Vec<usize>,
    pub max_subset_distance: f64,
}

/// The on-disk result of a discovery run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub schema_version: u32,
    pub series: SeriesInfo,
    pub config: ConfigInfo,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reference_window: Option<[usize; 2]>,
    pub generations_run: usize,
    pub elapsed_ms: u64,
    pub motifs: Vec<MotifRecord>,
    pub stats: RunStats,
    pub trace: Vec<GenerationTrace>,
}

/// Build the document for a finished run. `stats` should come from
/// [`crate::analytics::compute_stats`] with the same reference window.
pub fn catalog_document(
    result: &RunResult,
    stats: &RunStats,
    reference_window: Option<(usize, usize)>,
) -> CatalogDocument {
    let pre = result.pre();
    let config = result.config();
    let thr = config
        .threshold()
        .resolve(pre.sigma_diff(), config.symbol_length())
        .expect("the run already resolved this threshold");

    let motifs = result
        .catalog()
        .motifs()
        .iter()
        .enumerate()
        .map(|(id, m)| MotifRecord {
            id,
            symbols: m.symbols().to_string(),
            length: m.length(),
            starts_diff: m.occurrences().to_vec(),
            starts_raw: m.occurrences().to_vec(),
            max_subset_distance: round15(m.max_subset_distance()),
        })
        .collect();

    CatalogDocument {
        schema_version: CATALOG_SCHEMA_VERSION,
        series: SeriesInfo {
            label: pre.raw().label().to_string(),
            points: pre.raw().len(),
            diff_points: pre.diff().len(),
            sigma_diff: round15(pre.sigma_diff()),
        },
        config: ConfigInfo {
            symbol_length: config.symbol_length(),
            alphabet_size: config.alphabet_size(),
            threshold: config.threshold(),
            resolved_d: round15(thr.d()),
            resolved_r: round15(thr.r()),
            max_generations: config.max_generations(),
            min_occurrences: config.min_occurrences(),
        },
        reference_window: reference_window.map(|(a, b)| [a, b]),
        generations_run: result.generations_run(),
        elapsed_ms: result.elapsed_ms(),
        motifs,
        stats: rounded_stats(stats),
        trace: result.trace().to_vec(),
    }
}

pub fn catalog_to_json(doc: &CatalogDocument) -> Result<String, IoError> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    Ok(text)
}

pub fn catalog_from_json(text: &str) -> Result<CatalogDocument, IoError> {
    Ok(serde_json::from_str(text)?)
}

/// One CSV row per occurrence.
pub fn occurrence_csv(doc: &CatalogDocument) -> String {
    let mut out = String::from("motif_id,symbols,length,start_diff,start_raw,max_subset_distance\n");
    for m in &doc.motifs {
        for (sd, sr) in m.starts_diff.iter().zip(&m.starts_raw) {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                m.id, m.symbols, m.length, sd, sr, m.max_subset_distance
            )
            .expect("write to string");
        }
    }
    out
}

/// Aligned difference values of every occurrence of one motif, one row per
/// offset `t`, plus their mean, ready for plotting.
pub fn overlay_csv(motif: &MotifRecord, diff: &[f64]) -> Result<String, IoError> {
    for &start in &motif.starts_diff {
        if start + motif.length > diff.len() {
            return Err(IoError::Mismatch {
                reason: format!(
                    "occurrence at {start} with length {} exceeds the {} difference points",
                    motif.length,
                    diff.len()
                ),
            });
        }
    }
    let mut out = String::from("t");
    for start in &motif.starts_diff {
        write!(out, ",occ_{start}").expect("write to string");
    }
    out.push_str(",mean\n");
    for t in 0..motif.length {
        write!(out, "{t}").expect("write to string");
        let mut sum = 0.0;
        for &start in &motif.starts_diff {
            let v = diff[start + t];
            sum += v;
            write!(out, ",{}", round15(v)).expect("write to string");
        }
        let mean = round15(sum / motif.starts_diff.len() as f64);
        writeln!(out, ",{mean}").expect("write to string");
    }
    Ok(out)
}

fn threshold_parts(spec: ThresholdSpec) -> (&'static str, f64) {
    match spec {
        ThresholdSpec::Absolute(v) => ("absolute", v),
        ThresholdSpec::SigmaFraction(v) => ("sigma_fraction", v),
    }
}

/// One serializable sweep row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub symbol_length: usize,
    pub alphabet_size: usize,
    pub threshold: ThresholdSpec,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stats: Option<RunStats>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

pub fn sweep_records(rows: &[SweepRow]) -> Vec<SweepRecord> {
    rows.iter()
        .map(|row| SweepRecord {
            symbol_length: row.config.symbol_length(),
            alphabet_size: row.config.alphabet_size(),
            threshold: row.config.threshold(),
            stats: row.stats.as_ref().map(rounded_stats),
            error: row.error.clone(),
        })
        .collect()
}

pub fn sweep_to_json(rows: &[SweepRow]) -> Result<String, IoError> {
    let mut text = serde_json::to_string_pretty(&sweep_records(rows))?;
    text.push('\n');
    Ok(text)
}

/// Sweep table with one row per configuration; failed rows keep their
/// parameters and carry the error in the last column.
pub fn sweep_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(
        "symbol_length,alphabet_size,threshold_mode,threshold_value,C1,C2,C3,C4,C5,C6,C7,C8,MQ,ME,error\n",
    );
    for record in sweep_records(rows) {
        let (mode, value) = threshold_parts(record.threshold);
        write!(
            out,
            "{},{},{},{}",
            record.symbol_length, record.alphabet_size, mode, value
        )
        .expect("write to string");
        match &record.stats {
            Some(s) => write!(
                out,
                ",{},{},{},{},{},{},{},{},{},{}",
                s.motif_count,
                s.occurrence_count,
                s.mean_length,
                s.length_std,
                s.coverage_percent,
                s.mean_intra_distance,
                s.elapsed_ms,
                s.longest_reference_motif,
                s.quality,
                s.efficiency
            )
            .expect("write to string"),
            None => out.push_str(",,,,,,,,,,"),
        }
        let error = record.error.as_deref().unwrap_or("");
        // keep the table parseable even if an error message contains commas
        writeln!(out, ",{}", error.replace(',', ";")).expect("write to string");
    }
    out
}
