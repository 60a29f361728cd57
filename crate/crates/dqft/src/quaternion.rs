//! Quaternion algebra with exponential and logarithm maps.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::AlgebraError;
use crate::{SERIES_THRESHOLD, UNIT_TOLERANCE};

/// Quaternion `w + xi + yj + zk`, scalar part first.
///
/// Multiplication follows the Hamilton basis rules (`ij = k`, `ji = -k`,
/// `i² = j² = k² = -1`) and is therefore not commutative. A quaternion with
/// `w = 0` is *pure* and carries a 3-vector; a quaternion of norm 1 is a
/// *unit* quaternion and encodes a rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const IDENTITY: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Pure quaternion `(0, v)` from a 3-vector.
    #[inline]
    pub const fn pure(v: [f64; 3]) -> Self {
        Self::new(0.0, v[0], v[1], v[2])
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// A pure quaternion has an exactly zero scalar part.
    #[inline]
    pub fn is_pure(&self) -> bool {
        self.w == 0.0
    }

    /// Unit check within [`UNIT_TOLERANCE`] of norm 1.
    #[inline]
    pub fn is_unit(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= UNIT_TOLERANCE
    }

    /// Scalar part `s(q) = w`.
    #[inline]
    pub fn scalar_part(&self) -> f64 {
        self.w
    }

    /// Vector part of `q` as a 3-vector.
    #[inline]
    pub fn vector_part(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Split into scalar part and vector part, `q = s(q) + v(q)`.
    ///
    /// The vector part is returned as a pure quaternion so the two halves
    /// reassemble by addition.
    #[inline]
    pub fn split(&self) -> (f64, Quaternion) {
        (self.w, Quaternion::pure(self.vector_part()))
    }

    /// Conjugate `q* = w - xi - yj - zk`.
    #[inline]
    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    #[inline]
    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Modulus `|q| = sqrt(w² + x² + y² + z²)`.
    #[inline]
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Four-component inner product.
    #[inline]
    pub fn dot(&self, other: &Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    #[inline]
    pub fn scaled(&self, s: f64) -> Self {
        Self::new(s * self.w, s * self.x, s * self.y, s * self.z)
    }

    /// Rescale to unit norm.
    pub fn normalized(&self) -> Result<Self, AlgebraError> {
        let n = self.norm();
        if !n.is_finite() {
            return Err(AlgebraError::NonFinite {
                context: "quaternion normalize",
            });
        }
        if n <= crate::DEGENERATE_NORM {
            return Err(AlgebraError::Degenerate {
                context: "quaternion normalize",
                norm: n,
            });
        }
        Ok(self.scaled(1.0 / n))
    }

    /// Exponential of a pure quaternion: `cos|q| + sin|q| · q/|q|`.
    ///
    /// `exp(0)` is the identity. The `sin|q|/|q|` coefficient switches to a
    /// series expansion for small `|q|`, so near-zero inputs never divide by
    /// a vanishing norm. The result is always a unit quaternion.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if !self.is_finite() {
            return Err(AlgebraError::NonFinite {
                context: "quaternion exp",
            });
        }
        if !self.is_pure() {
            return Err(AlgebraError::NotPure {
                context: "quaternion exp",
                scalar: self.w,
            });
        }
        let angle = self.norm();
        let k = sinc(angle);
        Ok(Self::new(angle.cos(), k * self.x, k * self.y, k * self.z))
    }

    /// Principal logarithm of a unit quaternion.
    ///
    /// Returns the pure quaternion `theta * v/|v|` with
    /// `theta = atan2(|v(q)|, w)` in `[0, pi]`. Inputs with `w < 0` are
    /// logged as-is on the same branch; callers that need hemisphere
    /// continuity across a sequence must align signs first. Near `w = ±1`
    /// the `theta/|v|` coefficient is evaluated by series, avoiding the
    /// division by a vanishing vector norm. For `w = -1` exactly the
    /// rotation axis is undefined and `pi·i` is returned by convention.
    pub fn log(&self) -> Result<Self, AlgebraError> {
        if !self.is_finite() {
            return Err(AlgebraError::NonFinite {
                context: "quaternion log",
            });
        }
        if !self.is_unit() {
            return Err(AlgebraError::NotUnit {
                context: "quaternion log",
                deviation: (self.norm() - 1.0).abs(),
            });
        }
        let v = self.vector_part();
        let vnorm = crate::vec3::norm(v);
        if vnorm == 0.0 {
            if self.w < 0.0 {
                return Ok(Quaternion::pure([std::f64::consts::PI, 0.0, 0.0]));
            }
            return Ok(Quaternion::ZERO);
        }
        let k = if vnorm < SERIES_THRESHOLD && self.w > 0.0 {
            // atan(t)/t / w with t = |v|/w, truncated after the t^4 term
            let t = vnorm / self.w;
            let t2 = t * t;
            (1.0 - t2 / 3.0 + t2 * t2 / 5.0) / self.w
        } else {
            vnorm.atan2(self.w) / vnorm
        };
        Ok(Quaternion::pure([k * v[0], k * v[1], k * v[2]]))
    }
}

/// `sin(x)/x` with a series fallback below [`SERIES_THRESHOLD`].
pub(crate) fn sinc(x: f64) -> f64 {
    if x.abs() < SERIES_THRESHOLD {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

impl Default for Quaternion {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    /// Hamilton product.
    #[inline]
    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, s: f64) -> Quaternion {
        self.scaled(s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q.scaled(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    const EPS: f64 = 1e-12;

    fn assert_close(a: Quaternion, b: Quaternion, tol: f64) {
        assert!(
            (a - b).norm() <= tol,
            "quaternions differ: {a:?} vs {b:?} (|diff| = {})",
            (a - b).norm()
        );
    }

    #[test]
    fn basis_products_hold_exactly() {
        use Quaternion as Q;
        let minus_one = Q::new(-1.0, 0.0, 0.0, 0.0);
        assert_eq!(Q::I * Q::J, Q::K);
        assert_eq!(Q::J * Q::K, Q::I);
        assert_eq!(Q::K * Q::I, Q::J);
        assert_eq!(Q::J * Q::I, -Q::K);
        assert_eq!(Q::K * Q::J, -Q::I);
        assert_eq!(Q::I * Q::K, -Q::J);
        assert_eq!(Q::I * Q::I, minus_one);
        assert_eq!(Q::J * Q::J, minus_one);
        assert_eq!(Q::K * Q::K, minus_one);
    }

    #[test]
    fn identity_is_neutral() {
        let q = Quaternion::new(0.3, -1.2, 0.7, 2.0);
        assert_eq!(q * Quaternion::IDENTITY, q);
        assert_eq!(Quaternion::IDENTITY * q, q);
    }

    #[test]
    fn conjugate_inverts_vector_part() {
        let q = Quaternion::new(1.5, 2.0, -3.0, 4.0);
        assert_eq!(q.conjugate(), Quaternion::new(1.5, -2.0, 3.0, -4.0));
        assert_eq!(Quaternion::IDENTITY.conjugate(), Quaternion::IDENTITY);
    }

    #[test]
    fn q_times_conjugate_is_norm_squared() {
        let q = Quaternion::new(0.4, -1.1, 2.2, 0.9);
        let p = q * q.conjugate();
        assert!((p.w - q.norm_sqr()).abs() < EPS);
        assert!(p.x.abs() < EPS && p.y.abs() < EPS && p.z.abs() < EPS);
    }

    #[test]
    fn norm_examples() {
        assert!((Quaternion::new(1.0, 1.0, 1.0, 1.0).norm() - 2.0).abs() < EPS);
        let s = 1.0 / 3f64.sqrt();
        assert!((Quaternion::new(0.0, s, s, s).norm() - 1.0).abs() < EPS);
        assert_eq!(Quaternion::ZERO.norm(), 0.0);
    }

    #[test]
    fn split_reassembles() {
        let q = Quaternion::new(2.0, 3.0, 4.0, 5.0);
        let (s, v) = q.split();
        assert_eq!(s, 2.0);
        assert_eq!(v, Quaternion::new(0.0, 3.0, 4.0, 5.0));
        assert_eq!(Quaternion::new(s, 0.0, 0.0, 0.0) + v, q);

        let p = Quaternion::pure([1.0, -2.0, 3.0]);
        assert_eq!(p.split(), (0.0, p));
        assert_eq!(Quaternion::IDENTITY.split(), (1.0, Quaternion::ZERO));
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(Quaternion::ZERO.exp().unwrap(), Quaternion::IDENTITY);
    }

    #[test]
    fn exp_examples() {
        let half_turn = Quaternion::pure([PI, 0.0, 0.0]).exp().unwrap();
        assert_close(half_turn, Quaternion::new(-1.0, 0.0, 0.0, 0.0), 1e-12);

        let quarter = Quaternion::pure([FRAC_PI_2, 0.0, 0.0]).exp().unwrap();
        assert_close(quarter, Quaternion::I, 1e-12);
    }

    #[test]
    fn exp_rejects_non_pure() {
        let err = Quaternion::new(0.1, 1.0, 0.0, 0.0).exp().unwrap_err();
        assert!(matches!(err, AlgebraError::NotPure { .. }));
    }

    #[test]
    fn log_examples() {
        assert_eq!(Quaternion::IDENTITY.log().unwrap(), Quaternion::ZERO);
        assert_close(
            Quaternion::I.log().unwrap(),
            Quaternion::pure([FRAC_PI_2, 0.0, 0.0]),
            1e-12,
        );
    }

    #[test]
    fn log_rejects_non_unit() {
        let err = Quaternion::new(0.5, 0.0, 0.0, 0.0).log().unwrap_err();
        assert!(matches!(err, AlgebraError::NotUnit { .. }));
    }

    #[test]
    fn log_of_minus_one_uses_axis_convention() {
        let q = Quaternion::new(-1.0, 0.0, 0.0, 0.0);
        assert_eq!(q.log().unwrap(), Quaternion::pure([PI, 0.0, 0.0]));
    }

    #[test]
    fn log_inverts_exp() {
        let s = 0.3 / 3f64.sqrt();
        let v = Quaternion::pure([s, s, s]);
        let back = v.exp().unwrap().log().unwrap();
        assert_close(back, v, 1e-12);
    }

    #[test]
    fn exp_log_round_trip_near_zero_angle() {
        // Exercises the series branches on both sides.
        for theta in [1e-8, 1e-7, 9.9e-7, 1.1e-6] {
            let v = Quaternion::pure([theta, 0.0, 0.0]);
            let back = v.exp().unwrap().log().unwrap();
            assert!((back - v).norm() <= 1e-15, "theta = {theta}");
        }
    }

    #[test]
    fn series_and_direct_branches_agree_at_threshold() {
        for vnorm in [0.9e-6_f64, 1.0e-6, 1.1e-6] {
            let direct = vnorm.sin() / vnorm;
            let x2 = vnorm * vnorm;
            let series = 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
            assert!((direct - series).abs() <= 1e-12);
        }
    }

    #[test]
    fn anti_homomorphism() {
        let a = Quaternion::new(0.2, 1.0, -0.5, 0.3);
        let b = Quaternion::new(-1.0, 0.4, 2.0, 1.1);
        let lhs = (a * b).conjugate();
        let rhs = b.conjugate() * a.conjugate();
        assert_close(lhs, rhs, 1e-12);
    }
}
