//! Property tests for the exact algebra: group laws, metric identities,
//! and invariance of angles under the isometries.

#![allow(clippy::needless_range_loop)]

use nil_geometry::{
    angle_between, metric_at, quadratic_map, reflect_y_axis, rotate_about_z, translation_to,
    NilPoint, NilTranslation, QuadraticDirection, TangentVector,
};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = f64> {
    -3.0..3.0f64
}

fn point() -> impl Strategy<Value = NilPoint> {
    (coord(), coord(), coord()).prop_map(|(x, y, z)| NilPoint::new(x, y, z))
}

fn translation() -> impl Strategy<Value = NilTranslation> {
    (coord(), coord(), coord()).prop_map(|(a, b, c)| NilTranslation::new(a, b, c))
}

fn tangent_at(p: NilPoint) -> impl Strategy<Value = TangentVector> {
    (coord(), coord(), coord()).prop_map(move |(u, v, w)| TangentVector::new(u, v, w, p))
}

proptest! {
    #[test]
    fn composition_is_associative(t1 in translation(), t2 in translation(), t3 in translation()) {
        let left = t1.then(t2).then(t3);
        let right = t1.then(t2.then(t3));
        prop_assert!((left.a - right.a).abs() < 1e-12);
        prop_assert!((left.b - right.b).abs() < 1e-12);
        prop_assert!((left.c - right.c).abs() < 1e-12);
    }

    #[test]
    fn inverse_cancels(t in translation()) {
        let id = t.then(t.inverse());
        prop_assert!(id.a.abs() < 1e-12 && id.b.abs() < 1e-12 && id.c.abs() < 1e-12);
        let id = t.inverse().then(t);
        prop_assert!(id.a.abs() < 1e-12 && id.b.abs() < 1e-12 && id.c.abs() < 1e-12);
    }

    #[test]
    fn acting_equals_composing(p in point(), t in translation()) {
        // a point is a group element: acting on it is composing with it
        let acted = t.apply(p);
        let composed = translation_to(p).then(t);
        prop_assert!((acted.x - composed.a).abs() < 1e-12);
        prop_assert!((acted.y - composed.b).abs() < 1e-12);
        prop_assert!((acted.z - composed.c).abs() < 1e-12);
    }

    #[test]
    fn translations_move_the_origin_home(p in point()) {
        let there = translation_to(p).apply(NilPoint::ORIGIN);
        prop_assert!(there.coord_distance(p) < 1e-12);
        let back = translation_to(p).inverse().apply(p);
        prop_assert!(back.coord_norm() < 1e-12);
    }

    #[test]
    fn metric_determinant_and_inverse(p in point()) {
        let g = metric_at(p);
        prop_assert!((g.det() - 1.0).abs() < 1e-12);
        let (m, inv) = (g.matrix(), g.inverse());
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for k in 0..3 {
                    s += m[i][k] * inv[k][j];
                }
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((s - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn pushforward_preserves_the_norm(t in translation(), v in tangent_at(NilPoint::ORIGIN)) {
        let moved = t.pushforward(v);
        prop_assert!((moved.g_norm() - v.euclidean_norm()).abs() < 1e-12);
    }

    #[test]
    fn angles_are_symmetric_and_scale_invariant(
        p in point(),
        (u1, u2, u3) in (coord(), coord(), coord()),
        (v1, v2, v3) in (coord(), coord(), coord()),
        k in 0.1..10.0f64,
    ) {
        let u = TangentVector::new(u1 + 0.1, u2, u3, p);
        let v = TangentVector::new(v1, v2 + 0.1, v3, p);
        prop_assume!(u.euclidean_norm() > 1e-6 && v.euclidean_norm() > 1e-6);
        let a = angle_between(u, v, p).unwrap();
        let b = angle_between(v, u, p).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
        let c = angle_between(u.scale(k), v, p).unwrap();
        prop_assert!((a - c).abs() < 1e-9);
        prop_assert!((0.0..=std::f64::consts::PI).contains(&a));
    }

    #[test]
    fn quadratic_map_round_trips(p in point()) {
        let fwd = quadratic_map(p, QuadraticDirection::Forward);
        let back = quadratic_map(fwd, QuadraticDirection::Backward);
        prop_assert!(back.coord_distance(p) < 1e-12);
    }

    #[test]
    fn rotation_is_the_conjugated_linear_rotation(p in point(), omega in -3.2..3.2f64) {
        let (s, c) = omega.sin_cos();
        let fwd = quadratic_map(p, QuadraticDirection::Forward);
        let lin = NilPoint::new(fwd.x * c - fwd.y * s, fwd.x * s + fwd.y * c, fwd.z);
        let conj = quadratic_map(lin, QuadraticDirection::Backward);
        let direct = rotate_about_z(p, omega);
        prop_assert!(direct.coord_distance(conj) < 1e-12);
    }

    #[test]
    fn reflection_is_involutive_and_rotations_preserve_the_origin_metric(
        p in point(),
        omega in -3.2..3.2f64,
    ) {
        prop_assert!(reflect_y_axis(reflect_y_axis(p)).coord_distance(p) == 0.0);
        // rotation about the origin fixes it
        let o = rotate_about_z(NilPoint::ORIGIN, omega);
        prop_assert!(o.coord_norm() == 0.0);
    }
}
