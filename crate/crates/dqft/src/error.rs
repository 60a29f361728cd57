//! Error type shared by the quaternion, dual-quaternion and screw modules.

use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    /// An input component is NaN or infinite.
    #[error("{context}: input has a non-finite component")]
    NonFinite { context: &'static str },

    /// A pure quaternion (zero scalar part) was required.
    #[error("{context}: expected a pure quaternion, scalar part is {scalar}")]
    NotPure { context: &'static str, scalar: f64 },

    /// A unit quaternion or unit dual-quaternion was required.
    #[error("{context}: expected a unit value, norm deviation is {deviation:e}")]
    NotUnit { context: &'static str, deviation: f64 },

    /// The real part is too small to normalize against.
    #[error("{context}: degenerate input, |real part| = {norm:e}")]
    Degenerate { context: &'static str, norm: f64 },

    /// Conjugate variant tags are 1, 2 or 3.
    #[error("invalid conjugate variant tag {tag}, expected 1, 2 or 3")]
    InvalidConjugateVariant { tag: u8 },

    /// Screw axis direction must be unit length when the screw is non-trivial.
    #[error("screw direction must be unit length when theta or d is nonzero, |l| = {norm}")]
    ScrewAxisNotUnit { norm: f64 },

    /// Screw direction and moment must be orthogonal.
    #[error("screw direction and moment violate the Pluecker condition, <l, m> = {dot:e}")]
    ScrewNotPluecker { dot: f64 },
}
