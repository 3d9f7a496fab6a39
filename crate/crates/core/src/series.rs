//! Differencing and normalization of a raw series ahead of symbolization.
//!
//! Matching works on the movement between consecutive points rather than on
//! absolute level, so every run starts from the first-order difference of the
//! input, z-normalized so that breakpoints derived from the standard normal
//! density apply. The standard deviation of the raw (unnormalized) difference
//! is kept around because distance thresholds may be expressed as a fraction
//! of it.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("series has {len} points, need at least {min}")]
    TooShort { len: usize, min: usize },
    #[error("non-finite value {value} at index {index}")]
    NonFinite { index: usize, value: f64 },
    #[error("series variance is zero, nothing to symbolize")]
    ZeroVariance,
}

/// A univariate series with a label. All values are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    label: String,
    values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(label: impl Into<String>, values: Vec<f64>) -> Result<Self, SeriesError> {
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(SeriesError::NonFinite {
                index,
                value: values[index],
            });
        }
        Ok(Self {
            label: label.into(),
            values,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A series prepared for symbolization: the raw input, its first-order
/// difference, and the z-normalized difference that windows are read from.
#[derive(Debug, Clone, PartialEq)]
pub struct PreprocessedSeries {
    raw: TimeSeries,
    diff: Vec<f64>,
    norm: Vec<f64>,
    sigma_diff: f64,
}

impl PreprocessedSeries {
    pub fn raw(&self) -> &TimeSeries {
        &self.raw
    }

    /// Unnormalized first-order difference; distance checks run on this.
    pub fn diff(&self) -> &[f64] {
        &self.diff
    }

    /// Z-normalized difference; windows and symbols are read from this.
    pub fn norm(&self) -> &[f64] {
        &self.norm
    }

    /// Population standard deviation of the difference series, recorded
    /// before normalization.
    pub fn sigma_diff(&self) -> f64 {
        self.sigma_diff
    }
}

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Population standard deviation (divide by n, not n-1).
pub fn population_std(values: &[f64]) -> f64 {
    let m = mean(values);
    let var = values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / values.len() as f64;
    var.sqrt()
}

/// First-order difference: `diff[i] = values[i+1] - values[i]`.
pub fn difference(series: &TimeSeries) -> Result<Vec<f64>, SeriesError> {
    let values = series.values();
    if values.len() < 2 {
        return Err(SeriesError::TooShort {
            len: values.len(),
            min: 2,
        });
    }
    Ok(values.windows(2).map(|w| w[1] - w[0]).collect())
}

/// Z-normalize to zero mean and unit population standard deviation.
pub fn z_normalize(values: &[f64]) -> Result<Vec<f64>, SeriesError> {
    if values.is_empty() {
        return Err(SeriesError::TooShort { len: 0, min: 1 });
    }
    let m = mean(values);
    let sd = population_std(values);
    if sd == 0.0 {
        return Err(SeriesError::ZeroVariance);
    }
    Ok(values.iter().map(|v| (v - m) / sd).collect())
}

/// Difference then z-normalize, keeping every intermediate product.
pub fn preprocess(series: TimeSeries) -> Result<PreprocessedSeries, SeriesError> {
    let diff = difference(&series)?;
    let sigma_diff = population_std(&diff);
    let norm = z_normalize(&diff)?;
    Ok(PreprocessedSeries {
        raw: series,
        diff,
        norm,
        sigma_diff,
    })
}
