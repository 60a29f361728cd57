//! Screw coordinates: the `(theta, d, l, m)` parameterization of a rigid
//! transform, with `(l, m)` the Pluecker coordinates of the screw axis.

use crate::dual::DualQuaternion;
use crate::error::AlgebraError;
use crate::quaternion::Quaternion;
use crate::{vec3, UNIT_TOLERANCE};

/// Screw parameters of a rigid transform.
///
/// `theta` is the rotation angle about the axis in `[0, 2π)`, `d` the
/// translation along it (the pitch displacement), `direction` the unit axis
/// direction `l`, and `moment` the axis moment `m = p × l` for any point `p`
/// on the axis. Degenerate conventions: the identity transform maps to
/// `(0, 0, +x, 0)` and a pure translation to `(0, |t|, t/|t|, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScrewParameters {
    pub theta: f64,
    pub d: f64,
    pub direction: [f64; 3],
    pub moment: [f64; 3],
}

impl ScrewParameters {
    pub const fn new(theta: f64, d: f64, direction: [f64; 3], moment: [f64; 3]) -> Self {
        Self {
            theta,
            d,
            direction,
            moment,
        }
    }

    /// Rebuild the unit dual-quaternion
    /// `(cos(θ/2) + sin(θ/2) l) + ε (-(d/2) sin(θ/2) + sin(θ/2) m + (d/2) cos(θ/2) l)`.
    pub fn to_dual_quaternion(&self) -> Result<DualQuaternion, AlgebraError> {
        if !(self.theta.is_finite()
            && self.d.is_finite()
            && vec3::is_finite(self.direction)
            && vec3::is_finite(self.moment))
        {
            return Err(AlgebraError::NonFinite {
                context: "screw to dual-quaternion",
            });
        }
        let nontrivial = self.theta != 0.0 || self.d != 0.0;
        if nontrivial {
            let n = vec3::norm(self.direction);
            if (n - 1.0).abs() > UNIT_TOLERANCE {
                return Err(AlgebraError::ScrewAxisNotUnit { norm: n });
            }
        }
        if self.theta != 0.0 {
            // Pluecker condition, relative so huge near-identity moments pass.
            let dot = vec3::dot(self.direction, self.moment);
            if dot.abs() > UNIT_TOLERANCE * vec3::norm(self.moment).max(1.0) {
                return Err(AlgebraError::ScrewNotPluecker { dot });
            }
        }
        let half = 0.5 * self.theta;
        let (s, c) = half.sin_cos();
        let half_d = 0.5 * self.d;
        let real = Quaternion::new(
            c,
            s * self.direction[0],
            s * self.direction[1],
            s * self.direction[2],
        );
        let dvec = vec3::add(
            vec3::scale(s, self.moment),
            vec3::scale(half_d * c, self.direction),
        );
        let dual = Quaternion::new(-half_d * s, dvec[0], dvec[1], dvec[2]);
        Ok(DualQuaternion::new(real, dual))
    }
}

impl DualQuaternion {
    /// Decompose a unit dual-quaternion into screw parameters.
    ///
    /// The angle branch is `theta = 2 atan2(|v(q_r)|, w_r)`, so inputs with
    /// `w_r < 0` land in `(π, 2π)` and the round trip through
    /// [`ScrewParameters::to_dual_quaternion`] reproduces the sign of the
    /// input. Rotations within [`UNIT_TOLERANCE`] of the identity take the
    /// degenerate pure-translation branch.
    pub fn to_screw(&self) -> Result<ScrewParameters, AlgebraError> {
        if !self.is_unit() {
            return Err(AlgebraError::NotUnit {
                context: "dual-quaternion to screw",
                deviation: (self.real.norm() - 1.0)
                    .abs()
                    .max(self.real.dot(&self.dual).abs()),
            });
        }
        let vr = self.real.vector_part();
        let s = vec3::norm(vr);
        if s <= UNIT_TOLERANCE {
            // No usable rotation axis: identity or pure translation.
            let (_, t) = self.to_rot_trans()?;
            let tn = vec3::norm(t);
            if tn <= UNIT_TOLERANCE {
                return Ok(ScrewParameters::new(0.0, 0.0, [1.0, 0.0, 0.0], [0.0; 3]));
            }
            return Ok(ScrewParameters::new(0.0, tn, vec3::scale(1.0 / tn, t), [0.0; 3]));
        }
        let c = self.real.w;
        let theta = 2.0 * s.atan2(c);
        let direction = vec3::scale(1.0 / s, vr);
        let d = -2.0 * self.dual.w / s;
        let moment = vec3::scale(
            1.0 / s,
            vec3::sub(
                self.dual.vector_part(),
                vec3::scale(0.5 * d * c, direction),
            ),
        );
        Ok(ScrewParameters::new(theta, d, direction, moment))
    }
}
