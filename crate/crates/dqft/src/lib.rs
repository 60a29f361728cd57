//! Dual-quaternion signal processing.
//!
//! A dual-quaternion packs a rotation and a translation into one
//! eight-component hypercomplex number, so a rigid-motion track becomes a
//! single sequence that can be transformed, filtered and reconstructed as a
//! whole rather than channel by channel. This crate provides:
//!
//! - [`Quaternion`] / [`DualQuaternion`]: Hamilton algebra, the three
//!   dual-quaternion conjugates, exponential/logarithm maps with stable
//!   small-angle handling, screw-coordinate conversion and rigid point
//!   transforms.
//! - [`spectral`]: left- and right-sided discrete dual-quaternion Fourier
//!   transforms with their inverses, a configurable pure unit transform axis,
//!   and an accelerated path built on a symplectic split into two complex
//!   channels per quaternion part.
//! - [`filter`]: low-pass, high-pass, band-pass and band-stop masks over
//!   wrap-around frequency distance, plus the transform → mask → inverse
//!   pipeline with optional renormalization back onto the unit manifold.
//! - [`track`] / [`io`] / [`synth`]: motion-track ingestion and export
//!   (CSV/JSON), rigid and pure signal encodings, spectrum export for
//!   plotting, and a deterministic synthetic motion generator.

pub mod dual;
pub mod error;
pub mod filter;
pub mod io;
pub mod quaternion;
pub mod screw;
pub mod spectral;
pub mod synth;
pub mod track;

mod fast;
mod vec3;

pub use dual::{ConjugateVariant, DualNumber, DualQuaternion};
pub use error::AlgebraError;
pub use filter::{
    apply_mask, filter_signal, filter_signal_with, FilterError, FilterReport, FrequencyMask,
};
pub use io::{
    export_spectrum, load_track, load_track_path, read_spectrum_rows, save_track, spectrum_rows,
    FileFormat, LoadOptions, SpectrumRow,
};
pub use quaternion::Quaternion;
pub use screw::ScrewParameters;
pub use spectral::{
    dqft_fast, dqft_left, dqft_right, forward, idqft_fast, idqft_left, idqft_right, inverse,
    kernel, DQSignal, DQSpectrum, Engine, Side, SpectralError, TransformAxis,
};
pub use synth::{generate_synthetic, SynthComponent};
pub use track::{Encoding, EulerSample, MotionSample, MotionTrack, TrackError, TrackSamples};

/// Tolerance for unit-norm checks (`is_unit` on quaternions and
/// dual-quaternions, screw axis validation).
pub const UNIT_TOLERANCE: f64 = 1e-9;

/// Angle magnitude below which exp/log switch to series expansions.
pub const SERIES_THRESHOLD: f64 = 1e-6;

/// Real-part norm at or below which a dual-quaternion cannot be normalized.
pub const DEGENERATE_NORM: f64 = 1e-12;

/// Wrap-around frequency distance of bin `k` in an `m`-point spectrum:
/// `min(k, m - k)`. Bin 0 (DC) and bins near `m` are both "low" frequencies.
pub fn wrap_distance(k: usize, m: usize) -> usize {
    debug_assert!(k < m);
    k.min(m - k)
}
