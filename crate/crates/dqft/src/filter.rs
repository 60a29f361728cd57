//! Frequency-domain masks and the end-to-end filtering pipeline.
//!
//! Masks are real gains in `[0, 1]`, one per bin, applied pointwise to a
//! spectrum; real scalars commute with dual-quaternions, so left and right
//! application coincide. "Low" and "high" frequency are measured by the
//! wrap-around distance `d(k) = min(k, M - k)`: bin 0 and bins near M are
//! both slow oscillations.

use thiserror::Error;

use crate::dual::DualQuaternion;
use crate::error::AlgebraError;
use crate::spectral::{
    forward, inverse, DQSignal, DQSpectrum, Engine, Side, SpectralError, TransformAxis,
};
use crate::wrap_distance;

/// Errors raised by mask construction and the filter pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FilterError {
    #[error("mask length {mask} does not match spectrum length {spectrum}")]
    LengthMismatch { mask: usize, spectrum: usize },

    #[error("band bounds are inverted: lo {lo} > hi {hi}")]
    InvalidBand { lo: usize, hi: usize },

    #[error("gain {value} at bin {index} is outside [0, 1]")]
    InvalidGain { index: usize, value: f64 },

    #[error("mask must contain at least one gain")]
    EmptyMask,

    #[error("sample {index} became degenerate during renormalization, |real part| = {norm:e}")]
    DegenerateSample { index: usize, norm: f64 },

    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Per-bin real gains in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyMask {
    gains: Vec<f64>,
}

impl FrequencyMask {
    /// Validate arbitrary gains. Values strictly between 0 and 1 are
    /// allowed; no smooth window shapes are built in.
    pub fn new(gains: Vec<f64>) -> Result<Self, FilterError> {
        if gains.is_empty() {
            return Err(FilterError::EmptyMask);
        }
        for (index, &value) in gains.iter().enumerate() {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(FilterError::InvalidGain { index, value });
            }
        }
        Ok(Self { gains })
    }

    /// Unit gain everywhere.
    pub fn all_pass(len: usize) -> Self {
        Self {
            gains: vec![1.0; len],
        }
    }

    /// Keep bins with wrap-around distance at most `cutoff`. A cutoff of
    /// `⌊M/2⌋` or more passes everything; a cutoff of 0 keeps only DC.
    pub fn low_pass(len: usize, cutoff: usize) -> Self {
        Self {
            gains: (0..len)
                .map(|k| if wrap_distance(k, len) <= cutoff { 1.0 } else { 0.0 })
                .collect(),
        }
    }

    /// Complement of [`low_pass`](Self::low_pass): removes slow components
    /// without disturbing fast ones.
    pub fn high_pass(len: usize, cutoff: usize) -> Self {
        Self::low_pass(len, cutoff).complement()
    }

    /// Keep bins with wrap-around distance in `[lo, hi]`.
    pub fn band_pass(len: usize, lo: usize, hi: usize) -> Result<Self, FilterError> {
        if lo > hi {
            return Err(FilterError::InvalidBand { lo, hi });
        }
        Ok(Self {
            gains: (0..len)
                .map(|k| {
                    let d = wrap_distance(k, len);
                    if lo <= d && d <= hi {
                        1.0
                    } else {
                        0.0
                    }
                })
                .collect(),
        })
    }

    /// Complement of [`band_pass`](Self::band_pass).
    pub fn band_stop(len: usize, lo: usize, hi: usize) -> Result<Self, FilterError> {
        Ok(Self::band_pass(len, lo, hi)?.complement())
    }

    /// Gain-wise complement `1 - g(k)`.
    pub fn complement(&self) -> Self {
        Self {
            gains: self.gains.iter().map(|g| 1.0 - g).collect(),
        }
    }

    #[inline]
    pub fn gains(&self) -> &[f64] {
        &self.gains
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.gains.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.gains.is_empty()
    }

    /// Number of bins with nonzero gain.
    pub fn kept_bins(&self) -> usize {
        self.gains.iter().filter(|g| **g > 0.0).count()
    }
}

/// Outcome summary of a filtering run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterReport {
    /// Bins with nonzero gain in the applied mask.
    pub kept_bins: usize,
    /// `1 - (output spectral energy / input spectral energy)`, clamped to
    /// `[0, 1]`; energies use the eight-component Euclidean norm.
    pub attenuated_energy_fraction: f64,
    /// Whether the output samples were renormalized onto the unit manifold.
    pub renormalized: bool,
}

/// Scale every coefficient by its gain on all eight components. Side and
/// axis metadata carry over; idempotent for 0/1 masks.
pub fn apply_mask(spectrum: &DQSpectrum, mask: &FrequencyMask) -> Result<DQSpectrum, FilterError> {
    if mask.len() != spectrum.len() {
        return Err(FilterError::LengthMismatch {
            mask: mask.len(),
            spectrum: spectrum.len(),
        });
    }
    let coefficients = spectrum
        .coefficients()
        .iter()
        .zip(mask.gains())
        .map(|(c, g)| c.scaled(*g))
        .collect();
    Ok(crate::spectral::spectrum_from_parts(
        coefficients,
        spectrum.side(),
        *spectrum.axis(),
        spectrum.sample_rate(),
    ))
}

/// Transform, mask, inverse-transform using the naive reference engine.
/// See [`filter_signal_with`].
pub fn filter_signal(
    f: &DQSignal,
    mask: &FrequencyMask,
    side: Side,
    axis: &TransformAxis,
    renormalize: bool,
) -> Result<(DQSignal, FilterReport), FilterError> {
    filter_signal_with(f, mask, side, axis, renormalize, Engine::Naive)
}

/// Full pipeline: forward transform on the requested side, pointwise mask,
/// matching inverse, and optional renormalization of every output sample
/// with hemisphere continuity (the sign flips whenever consecutive real
/// parts would have negative inner product).
pub fn filter_signal_with(
    f: &DQSignal,
    mask: &FrequencyMask,
    side: Side,
    axis: &TransformAxis,
    renormalize: bool,
    engine: Engine,
) -> Result<(DQSignal, FilterReport), FilterError> {
    let spectrum = forward(f, axis, side, engine);
    let input_energy = spectrum.energy();
    let masked = apply_mask(&spectrum, mask)?;
    let output_energy = masked.energy();
    let mut signal = inverse(&masked, engine);
    if renormalize {
        signal = renormalize_signal(&signal)?;
    }
    let attenuated = if input_energy > 0.0 {
        (1.0 - output_energy / input_energy).clamp(0.0, 1.0)
    } else {
        0.0
    };
    Ok((
        signal,
        FilterReport {
            kept_bins: mask.kept_bins(),
            attenuated_energy_fraction: attenuated,
            renormalized: renormalize,
        },
    ))
}

/// Normalize each sample onto the unit manifold, flipping signs for
/// hemisphere continuity against the previous output sample.
fn renormalize_signal(signal: &DQSignal) -> Result<DQSignal, FilterError> {
    let mut out: Vec<DualQuaternion> = Vec::with_capacity(signal.len());
    for (index, sample) in signal.samples().iter().enumerate() {
        let unit = sample.normalized().map_err(|err| match err {
            AlgebraError::Degenerate { norm, .. } => FilterError::DegenerateSample { index, norm },
            _ => FilterError::DegenerateSample {
                index,
                norm: sample.real.norm(),
            },
        })?;
        let aligned = match out.last() {
            Some(prev) if prev.real.dot(&unit.real) < 0.0 => -unit,
            _ => unit,
        };
        out.push(aligned);
    }
    Ok(crate::spectral::signal_from_parts(out, signal.sample_rate()))
}
