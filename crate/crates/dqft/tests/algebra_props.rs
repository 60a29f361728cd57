//! Property tests for the algebra layer, checked against independent
//! matrix representations: an 8x8 real matrix for dual-quaternion
//! multiplication and a 4x4 homogeneous matrix for point transforms.

use dqft::{ConjugateVariant, DualQuaternion, Quaternion};
use proptest::prelude::*;

// ---------------------------------------------------------------------
// Matrix oracles (textbook formulas, no calls into the multiplication or
// transform paths under test)
// ---------------------------------------------------------------------

/// Left-multiplication matrix of a quaternion acting on [w, x, y, z].
fn left_matrix(q: &Quaternion) -> [[f64; 4]; 4] {
    [
        [q.w, -q.x, -q.y, -q.z],
        [q.x, q.w, -q.z, q.y],
        [q.y, q.z, q.w, -q.x],
        [q.z, -q.y, q.x, q.w],
    ]
}

fn dq_to_vec8(dq: &DualQuaternion) -> [f64; 8] {
    [
        dq.real.w, dq.real.x, dq.real.y, dq.real.z, dq.dual.w, dq.dual.x, dq.dual.y, dq.dual.z,
    ]
}

/// 8x8 block lower-triangular representation of left multiplication by `a`.
fn dq_left_matrix(a: &DualQuaternion) -> [[f64; 8]; 8] {
    let lr = left_matrix(&a.real);
    let ld = left_matrix(&a.dual);
    let mut m = [[0.0; 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = lr[i][j];
            m[i + 4][j + 4] = lr[i][j];
            m[i + 4][j] = ld[i][j];
        }
    }
    m
}

fn oracle_dq_mul(a: &DualQuaternion, b: &DualQuaternion) -> [f64; 8] {
    let m = dq_left_matrix(a);
    let v = dq_to_vec8(b);
    let mut out = [0.0; 8];
    for i in 0..8 {
        for j in 0..8 {
            out[i] += m[i][j] * v[j];
        }
    }
    out
}

/// Rotation matrix of a unit quaternion.
fn rotation_matrix(q: &Quaternion) -> [[f64; 3]; 3] {
    let (w, x, y, z) = (q.w, q.x, q.y, q.z);
    [
        [
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
        ],
        [
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
        ],
        [
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
        ],
    ]
}

/// Apply the 4x4 homogeneous matrix built from (rotation, translation).
fn oracle_transform(rotation: &Quaternion, translation: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    let r = rotation_matrix(rotation);
    let mut out = translation;
    for i in 0..3 {
        for (j, vj) in v.iter().enumerate() {
            out[i] += r[i][j] * vj;
        }
    }
    out
}

fn max_abs_diff8(a: &DualQuaternion, b: [f64; 8]) -> f64 {
    dq_to_vec8(a)
        .iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

// ---------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------

fn coeff() -> impl Strategy<Value = f64> {
    -2.0..2.0f64
}

fn quat() -> impl Strategy<Value = Quaternion> {
    (coeff(), coeff(), coeff(), coeff()).prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

fn unit_quat() -> impl Strategy<Value = Quaternion> {
    quat()
        .prop_filter("away from zero", |q| q.norm() > 0.2)
        .prop_map(|q| q.normalized().unwrap())
}

fn dual_quat() -> impl Strategy<Value = DualQuaternion> {
    (quat(), quat()).prop_map(|(r, d)| DualQuaternion::new(r, d))
}

fn vec3() -> impl Strategy<Value = [f64; 3]> {
    [coeff(), coeff(), coeff()]
}

fn unit_dq() -> impl Strategy<Value = DualQuaternion> {
    (unit_quat(), vec3()).prop_map(|(r, t)| DualQuaternion::from_rot_trans(r, t).unwrap())
}

// ---------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------

proptest! {
    #[test]
    fn quaternion_norm_is_multiplicative(a in quat(), b in quat()) {
        let lhs = (a * b).norm();
        let rhs = a.norm() * b.norm();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs.max(1.0));
    }

    #[test]
    fn quaternion_mul_is_associative(a in quat(), b in quat(), c in quat()) {
        let lhs = (a * b) * c;
        let rhs = a * (b * c);
        prop_assert!((lhs - rhs).norm() <= 1e-9);
    }

    #[test]
    fn quaternion_conjugate_antihomomorphism(a in quat(), b in quat()) {
        let lhs = (a * b).conjugate();
        let rhs = b.conjugate() * a.conjugate();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
    }

    #[test]
    fn dq_mul_matches_matrix_oracle(a in dual_quat(), b in dual_quat()) {
        let product = a * b;
        prop_assert!(max_abs_diff8(&product, oracle_dq_mul(&a, &b)) <= 1e-10);
    }

    #[test]
    fn dq_mul_is_associative(a in dual_quat(), b in dual_quat(), c in dual_quat()) {
        let lhs = (a * b) * c;
        let rhs = a * (b * c);
        prop_assert!((lhs - rhs).norm8() <= 1e-9);
    }

    #[test]
    fn dq_conjugate_antihomomorphism(a in dual_quat(), b in dual_quat()) {
        let lhs = (a * b).conjugate(ConjugateVariant::Quaternion);
        let rhs = b.conjugate(ConjugateVariant::Quaternion)
            * a.conjugate(ConjugateVariant::Quaternion);
        prop_assert!((lhs - rhs).norm8() <= 1e-12 * (1.0 + lhs.norm8()));
    }

    #[test]
    fn unit_products_stay_unit(a in unit_dq(), b in unit_dq()) {
        prop_assert!((a * b).is_unit());
    }

    #[test]
    fn variant_one_conjugate_inverts_units(z in unit_dq()) {
        let product = z * z.conjugate(ConjugateVariant::Quaternion);
        prop_assert!((product - DualQuaternion::IDENTITY).norm8() <= 1e-9);
    }

    #[test]
    fn unit_magnitude_is_one(z in unit_dq()) {
        let m = z.magnitude();
        prop_assert!((m.real - 1.0).abs() <= 1e-9);
        prop_assert!(m.dual.abs() <= 1e-9);
    }

    #[test]
    fn normalized_outputs_pass_unit_invariants(z in dual_quat()) {
        prop_assume!(z.real.norm() > 1e-3);
        let n = z.normalized().unwrap();
        prop_assert!(n.is_unit());
        let again = n.normalized().unwrap();
        prop_assert!((again - n).norm8() <= 1e-12);
    }

    #[test]
    fn quaternion_exp_log_round_trip(q in unit_quat()) {
        prop_assume!(q.w > 1e-6);
        let back = q.log().unwrap().exp().unwrap();
        prop_assert!((back - q).norm() <= 1e-9);
    }

    #[test]
    fn dq_exp_log_round_trip(z in unit_dq()) {
        prop_assume!(z.real.w > 1e-6);
        let back = z.log().unwrap().exp().unwrap();
        prop_assert!((back - z).norm8() <= 1e-9);
    }

    #[test]
    fn transform_matches_homogeneous_oracle(z in unit_dq(), v in vec3()) {
        let (r, t) = z.to_rot_trans().unwrap();
        let expected = oracle_transform(&r, t, v);
        let actual = z.transform_point(v).unwrap();
        for i in 0..3 {
            prop_assert!((actual[i] - expected[i]).abs() <= 1e-9);
        }
    }

    #[test]
    fn transform_is_an_isometry(z in unit_dq(), v1 in vec3(), v2 in vec3()) {
        let d_before: f64 = v1
            .iter()
            .zip(&v2)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        let w1 = z.transform_point(v1).unwrap();
        let w2 = z.transform_point(v2).unwrap();
        let d_after: f64 = w1
            .iter()
            .zip(&w2)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        prop_assert!((d_before - d_after).abs() <= 1e-9);
    }

    #[test]
    fn transform_composition(a in unit_dq(), b in unit_dq(), v in vec3()) {
        let composed = (a * b).transform_point(v).unwrap();
        let sequential = a.transform_point(b.transform_point(v).unwrap()).unwrap();
        for i in 0..3 {
            prop_assert!((composed[i] - sequential[i]).abs() <= 1e-9);
        }
    }

    #[test]
    fn screw_round_trip_preserves_transform(z in unit_dq(), v in vec3()) {
        let screw = z.to_screw().unwrap();
        let rebuilt = screw.to_dual_quaternion().unwrap();
        // Compare transforms through the matrix oracle so the sign
        // ambiguity of the double cover cannot cause a false failure.
        let (r1, t1) = z.to_rot_trans().unwrap();
        let (r2, t2) = rebuilt.to_rot_trans().unwrap();
        let expected = oracle_transform(&r1, t1, v);
        let actual = oracle_transform(&r2, t2, v);
        for i in 0..3 {
            prop_assert!((actual[i] - expected[i]).abs() <= 1e-9);
        }
    }
}

#[test]
fn oracle_matrix_reproduces_basis_table() {
    // Sanity-check the oracle itself against the nine basis products.
    let basis = [Quaternion::I, Quaternion::J, Quaternion::K];
    let expected = [
        [(-1.0, 0), (1.0, 3), (-1.0, 2)],
        [(-1.0, 3), (-1.0, 0), (1.0, 1)],
        [(1.0, 2), (-1.0, 1), (-1.0, 0)],
    ];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let a8 = DualQuaternion::from_real(*a);
            let b8 = DualQuaternion::from_real(*b);
            let got = oracle_dq_mul(&a8, &b8);
            let (sign, component) = expected[i][j];
            let mut want = [0.0; 8];
            want[component] = sign;
            assert_eq!(got, want, "basis {i} * {j}");
        }
    }
}
