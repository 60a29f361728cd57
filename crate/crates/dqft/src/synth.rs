//! Deterministic synthetic motion generation.
//!
//! Each component contributes a cosine screw motion at a given wrap-around
//! bin distance; per frame the rotation vectors sum before exponentiation
//! and the translations sum directly. Cosine phase keeps the Nyquist bin
//! alive on even lengths (a sine would sample to zero there).

use crate::quaternion::Quaternion;
use crate::track::{MotionSample, MotionTrack, TrackError};
use crate::vec3;

/// One sinusoidal screw component of a synthetic track.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthComponent {
    /// Wrap-around bin distance of the oscillation, at most `⌊M/2⌋`.
    pub bin: usize,
    /// Peak rotation-vector magnitude in radians.
    pub rot_amplitude: f64,
    /// Peak translation magnitude.
    pub trans_amplitude: f64,
    /// Screw axis; normalized internally.
    pub axis: [f64; 3],
}

/// Generate a rigid track of `m` frames superposing the given components.
/// An empty component list produces the identity track.
pub fn generate_synthetic(
    m: usize,
    components: &[SynthComponent],
    sample_rate: f64,
) -> Result<MotionTrack, TrackError> {
    if m == 0 {
        return Err(TrackError::Empty);
    }
    if !sample_rate.is_finite() || sample_rate <= 0.0 {
        return Err(TrackError::InvalidSample {
            index: 0,
            message: format!("sample rate must be finite and positive, got {sample_rate}"),
        });
    }
    let mut axes = Vec::with_capacity(components.len());
    for (index, c) in components.iter().enumerate() {
        if !(c.rot_amplitude.is_finite()
            && c.trans_amplitude.is_finite()
            && vec3::is_finite(c.axis))
        {
            return Err(TrackError::InvalidComponent {
                index,
                message: "non-finite component".into(),
            });
        }
        if c.bin > m / 2 {
            return Err(TrackError::InvalidComponent {
                index,
                message: format!("bin distance {} exceeds M/2 = {}", c.bin, m / 2),
            });
        }
        let n = vec3::norm(c.axis);
        if n <= 1e-12 {
            if c.rot_amplitude != 0.0 || c.trans_amplitude != 0.0 {
                return Err(TrackError::InvalidComponent {
                    index,
                    message: "zero axis with nonzero amplitude".into(),
                });
            }
            axes.push([0.0; 3]);
        } else {
            axes.push(vec3::scale(1.0 / n, c.axis));
        }
    }

    let mut samples = Vec::with_capacity(m);
    for frame in 0..m {
        let mut rot_vec = [0.0; 3];
        let mut translation = [0.0; 3];
        for (c, axis) in components.iter().zip(&axes) {
            let phase =
                2.0 * std::f64::consts::PI * ((c.bin * frame) % m) as f64 / m as f64;
            let envelope = phase.cos();
            rot_vec = vec3::add(rot_vec, vec3::scale(c.rot_amplitude * envelope, *axis));
            translation = vec3::add(
                translation,
                vec3::scale(c.trans_amplitude * envelope, *axis),
            );
        }
        samples.push(MotionSample {
            t: frame as f64 / sample_rate,
            rotation: Quaternion::pure(rot_vec).exp()?,
            translation,
        });
    }
    MotionTrack::from_rigid(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::track::TrackSamples;

    #[test]
    fn empty_component_list_is_identity_track() {
        let track = generate_synthetic(5, &[], 1.0).unwrap();
        let TrackSamples::Rigid(samples) = track.samples() else {
            unreachable!()
        };
        for s in samples {
            assert_eq!(s.rotation, Quaternion::IDENTITY);
            assert_eq!(s.translation, [0.0; 3]);
        }
    }

    #[test]
    fn zero_amplitude_is_identity_track() {
        let component = SynthComponent {
            bin: 2,
            rot_amplitude: 0.0,
            trans_amplitude: 0.0,
            axis: [0.0, 0.0, 1.0],
        };
        let track = generate_synthetic(8, &[component], 1.0).unwrap();
        let TrackSamples::Rigid(samples) = track.samples() else {
            unreachable!()
        };
        for s in samples {
            assert_eq!(s.rotation, Quaternion::IDENTITY);
            assert_eq!(s.translation, [0.0; 3]);
        }
    }

    #[test]
    fn rejects_bin_past_nyquist() {
        let component = SynthComponent {
            bin: 5,
            rot_amplitude: 0.1,
            trans_amplitude: 0.0,
            axis: [1.0, 0.0, 0.0],
        };
        assert!(matches!(
            generate_synthetic(8, &[component], 1.0),
            Err(TrackError::InvalidComponent { index: 0, .. })
        ));
    }

    #[test]
    fn determinism_is_byte_identical() {
        let components = [
            SynthComponent {
                bin: 1,
                rot_amplitude: 0.2,
                trans_amplitude: 0.5,
                axis: [0.0, 0.0, 1.0],
            },
            SynthComponent {
                bin: 3,
                rot_amplitude: 0.05,
                trans_amplitude: 0.1,
                axis: [1.0, 1.0, 0.0],
            },
        ];
        let mut first = Vec::new();
        let mut second = Vec::new();
        crate::io::save_track(
            &generate_synthetic(32, &components, 10.0).unwrap(),
            &mut first,
            crate::io::FileFormat::Csv,
        )
        .unwrap();
        crate::io::save_track(
            &generate_synthetic(32, &components, 10.0).unwrap(),
            &mut second,
            crate::io::FileFormat::Csv,
        )
        .unwrap();
        assert_eq!(first, second);
    }
}
