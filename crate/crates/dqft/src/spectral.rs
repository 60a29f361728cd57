//! Discrete dual-quaternion Fourier transforms.
//!
//! Because dual-quaternion multiplication is not commutative there are two
//! transform families, distinguished by which side of the sample the kernel
//! `e^{-μ 2π (xt/M)}` lands on:
//!
//! - right sided: `F(t) = (1/√M) Σ_x f(x) e^{-μ 2π (xt/M)}`
//! - left sided:  `F(t) = (1/√M) Σ_x e^{-μ 2π (xt/M)} f(x)`
//!
//! The inverses use the positive exponent with the same `1/√M`
//! normalization, so forward/inverse pairs are unitary. The axis `μ` is a
//! pure unit quaternion embedded with zero dual part; it defaults to
//! `(i + j + k)/√3`.
//!
//! The double-loop evaluation here is the reference; [`dqft_fast`] and
//! [`idqft_fast`] produce the same values through per-channel complex FFTs.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::dual::DualQuaternion;
use crate::quaternion::Quaternion;
use crate::vec3;

pub use crate::fast::{dqft_fast, idqft_fast};

/// Which side of the sample the transform kernel multiplies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// Transform implementation selector. The naive double loop is always the
/// reference; the fast path must be requested explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Naive,
    Fast,
}

/// Errors raised by the spectral layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("signal must contain at least one sample")]
    EmptySignal,

    #[error("sample {index} has a non-finite component")]
    NonFiniteSample { index: usize },

    #[error("sample rate must be finite and positive, got {rate}")]
    InvalidSampleRate { rate: f64 },

    #[error("transform axis must be a pure quaternion, scalar part is {scalar}")]
    AxisNotPure { scalar: f64 },

    #[error("transform axis must be unit length, norm deviation is {deviation:e}")]
    AxisNotUnit { deviation: f64 },

    #[error("transform axis vector must be nonzero and finite")]
    AxisDegenerate,

    #[error("expected a {expected}-sided spectrum, found {found}-sided")]
    SideMismatch { expected: Side, found: Side },
}

/// Pure unit quaternion playing the role of the imaginary unit in the
/// transform kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformAxis {
    mu: Quaternion,
}

impl TransformAxis {
    /// Axis tolerance is tighter than the general unit tolerance because the
    /// kernel is raised to powers up to M.
    const AXIS_TOLERANCE: f64 = 1e-12;

    /// Validate a pure unit quaternion as a transform axis.
    pub fn new(mu: Quaternion) -> Result<Self, SpectralError> {
        if !mu.is_finite() {
            return Err(SpectralError::AxisDegenerate);
        }
        if !mu.is_pure() {
            return Err(SpectralError::AxisNotPure { scalar: mu.w });
        }
        let deviation = (mu.norm() - 1.0).abs();
        if deviation > Self::AXIS_TOLERANCE {
            return Err(SpectralError::AxisNotUnit { deviation });
        }
        Ok(Self { mu })
    }

    /// Build an axis from an arbitrary nonzero 3-vector by normalizing it.
    pub fn from_vector(v: [f64; 3]) -> Result<Self, SpectralError> {
        if !vec3::is_finite(v) {
            return Err(SpectralError::AxisDegenerate);
        }
        let n = vec3::norm(v);
        if n <= 1e-12 {
            return Err(SpectralError::AxisDegenerate);
        }
        Ok(Self {
            mu: Quaternion::pure(vec3::scale(1.0 / n, v)),
        })
    }

    #[inline]
    pub fn mu(&self) -> Quaternion {
        self.mu
    }
}

impl Default for TransformAxis {
    /// `(i + j + k)/√3`.
    fn default() -> Self {
        Self::from_vector([1.0, 1.0, 1.0]).expect("constant axis is valid")
    }
}

/// Length-M sequence of dual-quaternion samples.
#[derive(Debug, Clone, PartialEq)]
pub struct DQSignal {
    samples: Vec<DualQuaternion>,
    sample_rate: f64,
}

impl DQSignal {
    /// Signal with the default sample rate of 1 Hz.
    pub fn new(samples: Vec<DualQuaternion>) -> Result<Self, SpectralError> {
        Self::with_sample_rate(samples, 1.0)
    }

    pub fn with_sample_rate(
        samples: Vec<DualQuaternion>,
        sample_rate: f64,
    ) -> Result<Self, SpectralError> {
        if samples.is_empty() {
            return Err(SpectralError::EmptySignal);
        }
        if let Some(index) = samples.iter().position(|s| !s.is_finite()) {
            return Err(SpectralError::NonFiniteSample { index });
        }
        if !sample_rate.is_finite() || sample_rate <= 0.0 {
            return Err(SpectralError::InvalidSampleRate { rate: sample_rate });
        }
        Ok(Self {
            samples,
            sample_rate,
        })
    }

    #[inline]
    pub fn samples(&self) -> &[DualQuaternion] {
        &self.samples
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one sample
    }

    #[inline]
    pub fn sample_rate(&self) -> f64 {
        self.sample_rate
    }

    /// Total energy: sum of squared eight-component norms.
    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|s| s.norm8_sqr()).sum()
    }
}

/// Length-M spectrum with the side and axis recorded so the matching
/// inverse can be selected mechanically.
#[derive(Debug, Clone, PartialEq)]
pub struct DQSpectrum {
    coefficients: Vec<DualQuaternion>,
    side: Side,
    axis: TransformAxis,
    sample_rate: f64,
}

impl DQSpectrum {
    pub fn new(
        coefficients: Vec<DualQuaternion>,
        side: Side,
        axis: TransformAxis,
        sample_rate: f64,
    ) -> Result<Self, SpectralError> {
        if coefficients.is_empty() {
            return Err(SpectralError::EmptySignal);
        }
        if let Some(index) = coefficients.iter().position(|s| !s.is_finite()) {
            return Err(SpectralError::NonFiniteSample { index });
        }
        if !sample_rate.is_finite() || sample_rate <= 0.0 {
            return Err(SpectralError::InvalidSampleRate { rate: sample_rate });
        }
        Ok(Self {
            coefficients,
            side,
            axis,
            sample_rate,
        })
    }

    #[inline]
    pub fn coefficients(&self) -> &[DualQuaternion] {
        &self.coefficients
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn side(&self) -> Side {
        self.side
    }

    #[inline]
    pub fn axis(&self) -> &TransformAxis {
        &self.axis
    }

    #[inline]
    pub fn sample_rate(&self) -> f64 {
        self.sample_rate
    }

    /// Total spectral energy: sum of squared eight-component norms.
    pub fn energy(&self) -> f64 {
        self.coefficients.iter().map(|c| c.norm8_sqr()).sum()
    }
}

/// Kernel value `e^{-μ·angle} = cos(angle) - sin(angle)·μ`, embedded as a
/// dual-quaternion with zero dual part. Kernels with the same axis commute
/// and compose additively in the angle.
pub fn kernel(axis: &TransformAxis, angle: f64) -> DualQuaternion {
    let (s, c) = angle.sin_cos();
    let mu = axis.mu();
    DualQuaternion::from_real(Quaternion::new(c, -s * mu.x, -s * mu.y, -s * mu.z))
}

/// Kernel angle `2π (x t mod M) / M`; the integer reduction keeps large
/// bin products accurate.
#[inline]
pub(crate) fn bin_angle(x: usize, t: usize, m: usize) -> f64 {
    2.0 * std::f64::consts::PI * ((x * t) % m) as f64 / m as f64
}

fn transform_naive(
    input: &[DualQuaternion],
    axis: &TransformAxis,
    side: Side,
    forward: bool,
) -> Vec<DualQuaternion> {
    let m = input.len();
    let scale = 1.0 / (m as f64).sqrt();
    let sign = if forward { 1.0 } else { -1.0 };
    // Parallel across output bins; the per-bin sum runs in ascending x, so
    // results do not depend on the worker count.
    (0..m)
        .into_par_iter()
        .map(|t| {
            let mut acc = DualQuaternion::ZERO;
            for (x, sample) in input.iter().enumerate() {
                let k = kernel(axis, sign * bin_angle(x, t, m));
                acc = acc
                    + match side {
                        Side::Right => *sample * k,
                        Side::Left => k * *sample,
                    };
            }
            acc.scaled(scale)
        })
        .collect()
}

/// Right-sided forward transform: kernel multiplied on the right of each
/// sample.
pub fn dqft_right(f: &DQSignal, axis: &TransformAxis) -> DQSpectrum {
    DQSpectrum {
        coefficients: transform_naive(f.samples(), axis, Side::Right, true),
        side: Side::Right,
        axis: *axis,
        sample_rate: f.sample_rate(),
    }
}

/// Left-sided forward transform: kernel multiplied on the left of each
/// sample.
pub fn dqft_left(f: &DQSignal, axis: &TransformAxis) -> DQSpectrum {
    DQSpectrum {
        coefficients: transform_naive(f.samples(), axis, Side::Left, true),
        side: Side::Left,
        axis: *axis,
        sample_rate: f.sample_rate(),
    }
}

/// Right-sided inverse transform; rejects spectra tagged with the other
/// side.
pub fn idqft_right(spectrum: &DQSpectrum) -> Result<DQSignal, SpectralError> {
    if spectrum.side() != Side::Right {
        return Err(SpectralError::SideMismatch {
            expected: Side::Right,
            found: spectrum.side(),
        });
    }
    Ok(DQSignal {
        samples: transform_naive(spectrum.coefficients(), spectrum.axis(), Side::Right, false),
        sample_rate: spectrum.sample_rate(),
    })
}

/// Left-sided inverse transform; rejects spectra tagged with the other side.
pub fn idqft_left(spectrum: &DQSpectrum) -> Result<DQSignal, SpectralError> {
    if spectrum.side() != Side::Left {
        return Err(SpectralError::SideMismatch {
            expected: Side::Left,
            found: spectrum.side(),
        });
    }
    Ok(DQSignal {
        samples: transform_naive(spectrum.coefficients(), spectrum.axis(), Side::Left, false),
        sample_rate: spectrum.sample_rate(),
    })
}

/// Forward transform dispatch over side and engine.
pub fn forward(f: &DQSignal, axis: &TransformAxis, side: Side, engine: Engine) -> DQSpectrum {
    match (engine, side) {
        (Engine::Naive, Side::Right) => dqft_right(f, axis),
        (Engine::Naive, Side::Left) => dqft_left(f, axis),
        (Engine::Fast, _) => dqft_fast(f, axis, side),
    }
}

/// Inverse transform dispatch; the side is taken from the spectrum tag.
pub fn inverse(spectrum: &DQSpectrum, engine: Engine) -> DQSignal {
    match (engine, spectrum.side()) {
        (Engine::Naive, Side::Right) => {
            idqft_right(spectrum).expect("side tag matches by construction")
        }
        (Engine::Naive, Side::Left) => {
            idqft_left(spectrum).expect("side tag matches by construction")
        }
        (Engine::Fast, _) => idqft_fast(spectrum),
    }
}

/// Internal constructors for the fast path, which builds outputs directly.
pub(crate) fn spectrum_from_parts(
    coefficients: Vec<DualQuaternion>,
    side: Side,
    axis: TransformAxis,
    sample_rate: f64,
) -> DQSpectrum {
    DQSpectrum {
        coefficients,
        side,
        axis,
        sample_rate,
    }
}

pub(crate) fn signal_from_parts(samples: Vec<DualQuaternion>, sample_rate: f64) -> DQSignal {
    DQSignal {
        samples,
        sample_rate,
    }
}
