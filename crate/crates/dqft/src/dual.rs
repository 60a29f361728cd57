//! Dual numbers and dual-quaternions.
//!
//! A dual-quaternion is `q_r + q_d ε` with quaternion parts and `ε² = 0`.
//! Unit dual-quaternions (`|q_r| = 1`, `<q_r, q_d> = 0`) encode rigid
//! transforms; the dual part of a rigid encoding is `½ t q_r` for the
//! translation `t` written as a pure quaternion.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::AlgebraError;
use crate::quaternion::{sinc, Quaternion};
use crate::{vec3, DEGENERATE_NORM, SERIES_THRESHOLD, UNIT_TOLERANCE};

/// Dual number `a + b ε` with `ε² = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualNumber {
    pub real: f64,
    pub dual: f64,
}

impl DualNumber {
    pub const fn new(real: f64, dual: f64) -> Self {
        Self { real, dual }
    }
}

/// The three conjugates of a dual-quaternion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugateVariant {
    /// Variant 1: conjugate both quaternion parts, `q_r* + q_d* ε`. For a
    /// unit dual-quaternion this is the multiplicative inverse.
    Quaternion,
    /// Variant 2: negate the dual part, `q_r - q_d ε`.
    DualNumber,
    /// Variant 3: both combined, `q_r* - q_d* ε`. This is the conjugate
    /// used in the rigid point-transform sandwich.
    Combined,
}

impl ConjugateVariant {
    /// Map the numeric tags 1, 2, 3 onto variants.
    pub fn from_index(tag: u8) -> Result<Self, AlgebraError> {
        match tag {
            1 => Ok(Self::Quaternion),
            2 => Ok(Self::DualNumber),
            3 => Ok(Self::Combined),
            _ => Err(AlgebraError::InvalidConjugateVariant { tag }),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Self::Quaternion => 1,
            Self::DualNumber => 2,
            Self::Combined => 3,
        }
    }
}

/// Dual-quaternion `real + dual ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualQuaternion {
    pub real: Quaternion,
    pub dual: Quaternion,
}

impl DualQuaternion {
    pub const ZERO: DualQuaternion = DualQuaternion::new(Quaternion::ZERO, Quaternion::ZERO);
    pub const IDENTITY: DualQuaternion = DualQuaternion::new(Quaternion::IDENTITY, Quaternion::ZERO);

    #[inline]
    pub const fn new(real: Quaternion, dual: Quaternion) -> Self {
        Self { real, dual }
    }

    /// Embed a plain quaternion with zero dual part.
    #[inline]
    pub const fn from_real(real: Quaternion) -> Self {
        Self::new(real, Quaternion::ZERO)
    }

    /// Encode a 3-D point as `1 + ε (0, v)` for use in transform sandwiches.
    #[inline]
    pub const fn from_point(v: [f64; 3]) -> Self {
        Self::new(Quaternion::IDENTITY, Quaternion::pure(v))
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.real.is_finite() && self.dual.is_finite()
    }

    /// Unit check: `|q_r| = 1` and `<q_r, q_d> = 0`, both within
    /// [`UNIT_TOLERANCE`].
    #[inline]
    pub fn is_unit(&self) -> bool {
        (self.real.norm() - 1.0).abs() <= UNIT_TOLERANCE
            && self.real.dot(&self.dual).abs() <= UNIT_TOLERANCE
    }

    /// Eight-component inner product.
    #[inline]
    pub fn dot(&self, other: &Self) -> f64 {
        self.real.dot(&other.real) + self.dual.dot(&other.dual)
    }

    /// Squared Euclidean norm over all eight coefficients.
    #[inline]
    pub fn norm8_sqr(&self) -> f64 {
        self.real.norm_sqr() + self.dual.norm_sqr()
    }

    /// Euclidean norm over all eight coefficients.
    #[inline]
    pub fn norm8(&self) -> f64 {
        self.norm8_sqr().sqrt()
    }

    #[inline]
    pub fn scaled(&self, s: f64) -> Self {
        Self::new(self.real.scaled(s), self.dual.scaled(s))
    }

    /// One of the three conjugates; see [`ConjugateVariant`].
    #[inline]
    pub fn conjugate(&self, variant: ConjugateVariant) -> Self {
        match variant {
            ConjugateVariant::Quaternion => Self::new(self.real.conjugate(), self.dual.conjugate()),
            ConjugateVariant::DualNumber => Self::new(self.real, -self.dual),
            ConjugateVariant::Combined => Self::new(self.real.conjugate(), -self.dual.conjugate()),
        }
    }

    /// Magnitude `ζ ζ*` (variant-1 conjugate), which collapses to the dual
    /// number `|q_r|² + 2<q_r, q_d> ε`.
    pub fn magnitude(&self) -> DualNumber {
        DualNumber::new(self.real.norm_sqr(), 2.0 * self.real.dot(&self.dual))
    }

    /// Project onto the unit manifold: divide by `|q_r|`, then remove the
    /// component of the dual part parallel to the real part. Idempotent.
    pub fn normalized(&self) -> Result<Self, AlgebraError> {
        if !self.is_finite() {
            return Err(AlgebraError::NonFinite {
                context: "dual-quaternion normalize",
            });
        }
        let n = self.real.norm();
        if n <= DEGENERATE_NORM {
            return Err(AlgebraError::Degenerate {
                context: "dual-quaternion normalize",
                norm: n,
            });
        }
        let real = self.real.scaled(1.0 / n);
        let dual = self.dual.scaled(1.0 / n);
        let dual = dual - real.scaled(dual.dot(&real));
        Ok(Self::new(real, dual))
    }

    /// Rigid transform from a unit rotation quaternion and a translation.
    ///
    /// The dual part is `½ (0, t) · r`, which makes `<q_r, q_d> = 0` hold by
    /// construction.
    pub fn from_rot_trans(rotation: Quaternion, translation: [f64; 3]) -> Result<Self, AlgebraError> {
        if !rotation.is_finite() || !vec3::is_finite(translation) {
            return Err(AlgebraError::NonFinite {
                context: "dual-quaternion from rotation and translation",
            });
        }
        if !rotation.is_unit() {
            return Err(AlgebraError::NotUnit {
                context: "dual-quaternion from rotation and translation",
                deviation: (rotation.norm() - 1.0).abs(),
            });
        }
        let dual = (Quaternion::pure(translation) * rotation).scaled(0.5);
        Ok(Self::new(rotation, dual))
    }

    /// Recover `(rotation, translation)` from a unit dual-quaternion:
    /// `t = vec(2 q_d q_r*)`.
    pub fn to_rot_trans(&self) -> Result<(Quaternion, [f64; 3]), AlgebraError> {
        if !self.is_unit() {
            return Err(AlgebraError::NotUnit {
                context: "dual-quaternion to rotation and translation",
                deviation: unit_deviation(self),
            });
        }
        let t = (self.dual * self.real.conjugate()).scaled(2.0);
        Ok((self.real, t.vector_part()))
    }

    /// Transform a 3-D point by the sandwich `ζ p ζ*₃` with
    /// `p = 1 + ε (0, v)`, equivalent to `R v + t`.
    pub fn transform_point(&self, v: [f64; 3]) -> Result<[f64; 3], AlgebraError> {
        if !self.is_unit() {
            return Err(AlgebraError::NotUnit {
                context: "dual-quaternion point transform",
                deviation: unit_deviation(self),
            });
        }
        let p = Self::from_point(v);
        let image = *self * p * self.conjugate(ConjugateVariant::Combined);
        Ok(image.dual.vector_part())
    }

    /// Exponential of a dual-quaternion with pure real and dual parts.
    ///
    /// Writes the input as a dual angle times a screw axis and applies
    /// dual-number trigonometry. For half-angles below
    /// [`SERIES_THRESHOLD`] the two singular coefficients switch to series
    /// expansions, so the pure-translation limit `exp(ε ½t) = 1 + ε ½t` is
    /// exact. The output is always unit.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if !self.is_finite() {
            return Err(AlgebraError::NonFinite {
                context: "dual-quaternion exp",
            });
        }
        if !self.real.is_pure() {
            return Err(AlgebraError::NotPure {
                context: "dual-quaternion exp (real part)",
                scalar: self.real.w,
            });
        }
        if !self.dual.is_pure() {
            return Err(AlgebraError::NotPure {
                context: "dual-quaternion exp (dual part)",
                scalar: self.dual.w,
            });
        }
        let vr = self.real.vector_part();
        let vd = self.dual.vector_part();
        let half_angle = vec3::norm(vr);
        let gamma = vec3::dot(vr, vd);
        let a = sinc(half_angle);
        let b = cos_minus_sinc_over_sqr(half_angle);
        let real = Quaternion::new(half_angle.cos(), a * vr[0], a * vr[1], a * vr[2]);
        let dvec = vec3::add(vec3::scale(a, vd), vec3::scale(gamma * b, vr));
        let dual = Quaternion::new(-gamma * a, dvec[0], dvec[1], dvec[2]);
        Ok(Self::new(real, dual))
    }

    /// Principal logarithm of a unit dual-quaternion; inverse of [`exp`].
    ///
    /// Near-identity inputs reuse the same series coefficients as the
    /// exponential, so there is no division by `sin(θ/2) ≈ 0`. The other
    /// end of the branch is a true singularity: as `q_r` approaches `-1`
    /// (a full-turn rotation) the dual coefficients grow without bound,
    /// so round trips are only contractual for `w_r > 0`.
    ///
    /// [`exp`]: DualQuaternion::exp
    pub fn log(&self) -> Result<Self, AlgebraError> {
        if !self.is_unit() {
            return Err(AlgebraError::NotUnit {
                context: "dual-quaternion log",
                deviation: unit_deviation(self),
            });
        }
        let real = self.real.log()?;
        let vr = real.vector_part();
        let half_angle = vec3::norm(vr);
        let a = sinc(half_angle);
        let b = cos_minus_sinc_over_sqr(half_angle);
        let gamma = -self.dual.w / a;
        let vd = vec3::scale(
            1.0 / a,
            vec3::sub(self.dual.vector_part(), vec3::scale(gamma * b, vr)),
        );
        Ok(Self::new(real, Quaternion::pure(vd)))
    }
}

/// `(cos x - sinc x) / x²` with a series fallback below
/// [`SERIES_THRESHOLD`]; the second coefficient of the dual-part closed
/// forms in exp/log.
fn cos_minus_sinc_over_sqr(x: f64) -> f64 {
    if x.abs() < SERIES_THRESHOLD {
        let x2 = x * x;
        -1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0
    } else {
        (x.cos() - x.sin() / x) / (x * x)
    }
}

fn unit_deviation(dq: &DualQuaternion) -> f64 {
    let norm_dev = (dq.real.norm() - 1.0).abs();
    norm_dev.max(dq.real.dot(&dq.dual).abs())
}

impl Default for DualQuaternion {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Add for DualQuaternion {
    type Output = DualQuaternion;
    #[inline]
    fn add(self, rhs: DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(self.real + rhs.real, self.dual + rhs.dual)
    }
}

impl Sub for DualQuaternion {
    type Output = DualQuaternion;
    #[inline]
    fn sub(self, rhs: DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(self.real - rhs.real, self.dual - rhs.dual)
    }
}

impl Neg for DualQuaternion {
    type Output = DualQuaternion;
    #[inline]
    fn neg(self) -> DualQuaternion {
        DualQuaternion::new(-self.real, -self.dual)
    }
}

impl Mul for DualQuaternion {
    type Output = DualQuaternion;

    /// `ζ₁ ζ₂ = q_r1 q_r2 + (q_r1 q_d2 + q_d1 q_r2) ε`; the `ε²` term
    /// vanishes.
    #[inline]
    fn mul(self, rhs: DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(
            self.real * rhs.real,
            self.real * rhs.dual + self.dual * rhs.real,
        )
    }
}

impl Mul<f64> for DualQuaternion {
    type Output = DualQuaternion;
    #[inline]
    fn mul(self, s: f64) -> DualQuaternion {
        self.scaled(s)
    }
}

impl Mul<DualQuaternion> for f64 {
    type Output = DualQuaternion;
    #[inline]
    fn mul(self, dq: DualQuaternion) -> DualQuaternion {
        dq.scaled(self)
    }
}
