//! Motion tracks and their encodings as dual-quaternion signals.
//!
//! A track is either a sequence of rigid poses (unit rotation quaternion
//! plus translation) or of Euler-channel angle triples, uniformly sampled.
//! Two encodings map tracks onto signals:
//!
//! - `rigid`: unit dual-quaternions via the `½ t q_r` dual part,
//! - `pure`: rotation channels in the pure real part (Euler angles as-is,
//!   or the rotation vector `log` of a rigid pose) and translation channels
//!   in the pure dual part.

use thiserror::Error;

use crate::dual::DualQuaternion;
use crate::error::AlgebraError;
use crate::quaternion::Quaternion;
use crate::spectral::{DQSignal, SpectralError};
use crate::vec3;

/// Relative tolerance for uniform sample spacing.
const SPACING_TOLERANCE: f64 = 1e-6;

/// Unit tolerance for ingested rotations; looser than the algebra layer
/// because file data has been through serialization.
pub const INGEST_UNIT_TOLERANCE: f64 = 1e-6;

/// Errors raised by track construction, encoding and decoding.
#[derive(Debug, Error)]
pub enum TrackError {
    #[error("track must contain at least one sample")]
    Empty,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("sample {index}: {message}")]
    InvalidSample { index: usize, message: String },

    #[error("non-uniform sample spacing at index {index}: dt = {found}, expected {expected}")]
    NonUniformSpacing {
        index: usize,
        found: f64,
        expected: f64,
    },

    #[error("sample {index} is degenerate, |real part| = {norm:e}")]
    DegenerateSample { index: usize, norm: f64 },

    #[error("synthesis component {index}: {message}")]
    InvalidComponent { index: usize, message: String },

    #[error("{context} requires a {required} track")]
    WrongKind {
        context: &'static str,
        required: &'static str,
    },

    #[error(transparent)]
    Algebra(#[from] AlgebraError),

    #[error(transparent)]
    Spectral(#[from] SpectralError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Rigid pose sample: timestamp, unit rotation, translation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MotionSample {
    pub t: f64,
    pub rotation: Quaternion,
    pub translation: [f64; 3],
}

/// Euler-channel sample: timestamp and three angle displacements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerSample {
    pub t: f64,
    pub angles: [f64; 3],
}

/// The two sample layouts a track can hold.
#[derive(Debug, Clone, PartialEq)]
pub enum TrackSamples {
    Rigid(Vec<MotionSample>),
    Euler(Vec<EulerSample>),
}

/// How motion samples map onto dual-quaternions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Encoding {
    /// Unit dual-quaternion per pose.
    Rigid,
    /// Pure real part (rotation vector or Euler channels) plus pure dual
    /// part (translation channels).
    Pure,
}

/// Uniformly sampled motion track.
#[derive(Debug, Clone, PartialEq)]
pub struct MotionTrack {
    samples: TrackSamples,
    sample_rate: f64,
}

impl MotionTrack {
    /// Build a rigid track, validating finiteness, unit rotations (within
    /// [`INGEST_UNIT_TOLERANCE`]) and uniform strictly-increasing
    /// timestamps.
    pub fn from_rigid(samples: Vec<MotionSample>) -> Result<Self, TrackError> {
        for (index, s) in samples.iter().enumerate() {
            if !(s.t.is_finite() && s.rotation.is_finite() && vec3::is_finite(s.translation)) {
                return Err(TrackError::InvalidSample {
                    index,
                    message: "non-finite component".into(),
                });
            }
            let deviation = (s.rotation.norm() - 1.0).abs();
            if deviation > INGEST_UNIT_TOLERANCE {
                return Err(TrackError::InvalidSample {
                    index,
                    message: format!("rotation is not unit, norm deviation {deviation:e}"),
                });
            }
        }
        let sample_rate = derive_sample_rate(samples.iter().map(|s| s.t))?;
        if samples.is_empty() {
            return Err(TrackError::Empty);
        }
        Ok(Self {
            samples: TrackSamples::Rigid(samples),
            sample_rate,
        })
    }

    /// Build an Euler track; same timing validation as [`from_rigid`].
    ///
    /// [`from_rigid`]: MotionTrack::from_rigid
    pub fn from_euler(samples: Vec<EulerSample>) -> Result<Self, TrackError> {
        for (index, s) in samples.iter().enumerate() {
            if !(s.t.is_finite() && vec3::is_finite(s.angles)) {
                return Err(TrackError::InvalidSample {
                    index,
                    message: "non-finite component".into(),
                });
            }
        }
        let sample_rate = derive_sample_rate(samples.iter().map(|s| s.t))?;
        if samples.is_empty() {
            return Err(TrackError::Empty);
        }
        Ok(Self {
            samples: TrackSamples::Euler(samples),
            sample_rate,
        })
    }

    #[inline]
    pub fn samples(&self) -> &TrackSamples {
        &self.samples
    }

    pub fn len(&self) -> usize {
        match &self.samples {
            TrackSamples::Rigid(v) => v.len(),
            TrackSamples::Euler(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn is_rigid(&self) -> bool {
        matches!(self.samples, TrackSamples::Rigid(_))
    }

    /// Samples per second, derived from the timestamps (1 for single-sample
    /// tracks).
    #[inline]
    pub fn sample_rate(&self) -> f64 {
        self.sample_rate
    }

    /// Encode the track as a dual-quaternion signal.
    ///
    /// Rotations are renormalized to machine precision before encoding
    /// (ingestion tolerates up to [`INGEST_UNIT_TOLERANCE`] of drift, the
    /// algebra layer does not). With `hemisphere_align` set, each rotation
    /// flips sign when its inner product with the previous (aligned)
    /// rotation is negative, removing double-cover discontinuities.
    pub fn to_signal(
        &self,
        encoding: Encoding,
        hemisphere_align: bool,
    ) -> Result<DQSignal, TrackError> {
        let samples = match (&self.samples, encoding) {
            (TrackSamples::Euler(rows), Encoding::Pure) => rows
                .iter()
                .map(|row| {
                    DualQuaternion::new(Quaternion::pure(row.angles), Quaternion::ZERO)
                })
                .collect(),
            (TrackSamples::Euler(_), Encoding::Rigid) => {
                return Err(TrackError::WrongKind {
                    context: "rigid encoding",
                    required: "rigid",
                })
            }
            (TrackSamples::Rigid(rows), encoding) => {
                let mut out = Vec::with_capacity(rows.len());
                let mut previous: Option<Quaternion> = None;
                for row in rows {
                    let mut rotation = row.rotation.normalized()?;
                    if hemisphere_align {
                        if let Some(prev) = previous {
                            if prev.dot(&rotation) < 0.0 {
                                rotation = -rotation;
                            }
                        }
                        previous = Some(rotation);
                    }
                    let dq = match encoding {
                        Encoding::Rigid => {
                            DualQuaternion::from_rot_trans(rotation, row.translation)?
                        }
                        Encoding::Pure => DualQuaternion::new(
                            rotation.log()?,
                            Quaternion::pure(row.translation),
                        ),
                    };
                    out.push(dq);
                }
                out
            }
        };
        Ok(DQSignal::with_sample_rate(samples, self.sample_rate)?)
    }

    /// Decode a signal back into a rigid track; inverse of
    /// [`to_signal`](MotionTrack::to_signal) for rigid tracks.
    ///
    /// For the rigid encoding, `renormalize` projects each sample onto the
    /// unit manifold first; without it, samples failing the unit invariants
    /// are rejected. For the pure encoding, `renormalize` instead discards
    /// stray scalar parts (filtered pure signals keep them at rounding
    /// level); without it, a scalar part beyond 1e-9 is rejected.
    pub fn from_signal(
        signal: &DQSignal,
        encoding: Encoding,
        sample_rate: f64,
        renormalize: bool,
    ) -> Result<Self, TrackError> {
        let mut rows = Vec::with_capacity(signal.len());
        for (index, dq) in signal.samples().iter().enumerate() {
            let t = index as f64 / sample_rate;
            let row = match encoding {
                Encoding::Rigid => {
                    let dq = if renormalize {
                        dq.normalized().map_err(|err| match err {
                            AlgebraError::Degenerate { norm, .. } => {
                                TrackError::DegenerateSample { index, norm }
                            }
                            other => TrackError::Algebra(other),
                        })?
                    } else if dq.is_unit() {
                        *dq
                    } else {
                        return Err(TrackError::InvalidSample {
                            index,
                            message: "sample violates unit invariants; \
                                      enable renormalization or filter less aggressively"
                                .into(),
                        });
                    };
                    let (rotation, translation) = dq.to_rot_trans()?;
                    MotionSample {
                        t,
                        rotation,
                        translation,
                    }
                }
                Encoding::Pure => {
                    let max_scalar = dq.real.w.abs().max(dq.dual.w.abs());
                    if !renormalize && max_scalar > 1e-9 {
                        return Err(TrackError::InvalidSample {
                            index,
                            message: format!(
                                "pure-encoded sample has scalar part {max_scalar:e}"
                            ),
                        });
                    }
                    let rotation = Quaternion::pure(dq.real.vector_part()).exp()?;
                    MotionSample {
                        t,
                        rotation,
                        translation: dq.dual.vector_part(),
                    }
                }
            };
            rows.push(row);
        }
        Self::from_rigid(rows)
    }

    /// Decode a pure-encoded signal into Euler channels. The dual parts
    /// must be zero (within 1e-9): Euler tracks carry no translation.
    pub fn euler_from_signal(signal: &DQSignal, sample_rate: f64) -> Result<Self, TrackError> {
        let mut rows = Vec::with_capacity(signal.len());
        for (index, dq) in signal.samples().iter().enumerate() {
            let residual = dq.real.w.abs().max(dq.dual.norm());
            if residual > 1e-9 {
                return Err(TrackError::InvalidSample {
                    index,
                    message: format!(
                        "not an Euler-channel sample, scalar/dual residual {residual:e}"
                    ),
                });
            }
            rows.push(EulerSample {
                t: index as f64 / sample_rate,
                angles: dq.real.vector_part(),
            });
        }
        Self::from_euler(rows)
    }
}

fn derive_sample_rate(timestamps: impl Iterator<Item = f64>) -> Result<f64, TrackError> {
    let times: Vec<f64> = timestamps.collect();
    if times.len() < 2 {
        return Ok(1.0);
    }
    let dt = times[1] - times[0];
    if dt <= 0.0 {
        return Err(TrackError::InvalidSample {
            index: 1,
            message: format!("timestamps must be strictly increasing, dt = {dt}"),
        });
    }
    for (i, pair) in times.windows(2).enumerate() {
        let step = pair[1] - pair[0];
        if (step - dt).abs() > SPACING_TOLERANCE * dt.abs() {
            return Err(TrackError::NonUniformSpacing {
                index: i + 1,
                found: step,
                expected: dt,
            });
        }
    }
    Ok(1.0 / dt)
}
