//! Isometry invariance of solver outputs: distances and interior angles
//! must not change under translations, rotations about the z axis, or the
//! y-axis line reflection, and the distance function must be symmetric.

use nil_geometry::{
    angle_between, distance, initial_direction, reflect_y_axis, rotate_about_z, translation_to,
    triangle_report, unit_tangent_at_origin, NilPoint, NilTranslation, SolverConfig, Triangle,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15)
}

fn random_point(rng: &mut ChaCha8Rng) -> NilPoint {
    NilPoint::new(
        rng.gen_range(-1.2..1.2),
        rng.gen_range(-1.2..1.2),
        rng.gen_range(-1.2..1.2),
    )
}

#[test]
fn distance_is_symmetric() {
    let cfg = SolverConfig::default();
    let mut rng = rng();
    for _ in 0..15 {
        let p = random_point(&mut rng);
        let q = random_point(&mut rng);
        let a = distance(p, q, &cfg).unwrap();
        let b = distance(q, p, &cfg).unwrap();
        assert!((a - b).abs() < 1e-8, "d(P,Q)={a} d(Q,P)={b}");
    }
}

#[test]
fn distance_is_translation_invariant() {
    let cfg = SolverConfig::default();
    let mut rng = rng();
    for _ in 0..12 {
        let p = random_point(&mut rng);
        let q = random_point(&mut rng);
        let t = NilTranslation::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        let before = distance(p, q, &cfg).unwrap();
        let after = distance(t.apply(p), t.apply(q), &cfg).unwrap();
        assert!((before - after).abs() < 1e-8, "{before} vs {after}");
    }
}

#[test]
fn distance_is_rotation_and_reflection_invariant() {
    let cfg = SolverConfig::default();
    let mut rng = rng();
    for _ in 0..10 {
        let p = random_point(&mut rng);
        let q = random_point(&mut rng);
        let before = distance(p, q, &cfg).unwrap();

        let omega = rng.gen_range(-3.0..3.0);
        let rotated = distance(rotate_about_z(p, omega), rotate_about_z(q, omega), &cfg).unwrap();
        assert!((before - rotated).abs() < 1e-8, "{before} vs {rotated}");

        let reflected = distance(reflect_y_axis(p), reflect_y_axis(q), &cfg).unwrap();
        assert!((before - reflected).abs() < 1e-8, "{before} vs {reflected}");
    }
}

#[test]
fn triangle_inequality() {
    let cfg = SolverConfig::default();
    let mut rng = rng();
    for _ in 0..10 {
        let p = random_point(&mut rng);
        let q = random_point(&mut rng);
        let r = random_point(&mut rng);
        let pq = distance(p, q, &cfg).unwrap();
        let qr = distance(q, r, &cfg).unwrap();
        let pr = distance(p, r, &cfg).unwrap();
        assert!(pr <= pq + qr + 1e-8, "{pr} > {pq} + {qr}");
    }
}

#[test]
fn pitch_is_equal_at_both_endpoint_frames() {
    // the vertical momentum is conserved along geodesics and preserved by
    // translations, so the two endpoint pitches agree in absolute value
    let cfg = SolverConfig::default();
    let mut rng = rng();
    for _ in 0..10 {
        let p = random_point(&mut rng);
        let q = random_point(&mut rng);
        if p.coord_distance(q) < 1e-6 {
            continue;
        }
        let (dir_pq, _) = initial_direction(p, q, &cfg).unwrap();
        let (dir_qp, _) = initial_direction(q, p, &cfg).unwrap();
        assert!(
            (dir_pq.theta().abs() - dir_qp.theta().abs()).abs() < 1e-8,
            "pitch mismatch {} vs {}",
            dir_pq.theta(),
            dir_qp.theta()
        );
    }
}

#[test]
fn antipodal_pitch_symmetry_in_the_fibre_frame() {
    // A3 = (x3, 0, z3) and its frame image of A1, (-x3, 0, -z3), are
    // mirror images, so the solved |θ| agree
    let cfg = SolverConfig::default();
    for &(x3, z3) in &[(4.0, 0.5), (1.0, 0.5), (0.3, 1.1)] {
        let (fwd, _) = initial_direction(NilPoint::ORIGIN, NilPoint::new(x3, 0.0, z3), &cfg).unwrap();
        let (bwd, _) =
            initial_direction(NilPoint::ORIGIN, NilPoint::new(-x3, 0.0, -z3), &cfg).unwrap();
        assert!((fwd.theta().abs() - bwd.theta().abs()).abs() < 1e-8);
    }
}

fn report_angles(vertices: [NilPoint; 3], cfg: &SolverConfig) -> [f64; 3] {
    let t = Triangle::new(vertices[0], vertices[1], vertices[2]).unwrap();
    triangle_report(&t, cfg).unwrap().angles
}

#[test]
fn triangle_angles_are_isometry_invariant() {
    let cfg = SolverConfig::default();
    let mut rng = rng();
    for _ in 0..4 {
        let vs = [
            random_point(&mut rng),
            random_point(&mut rng),
            random_point(&mut rng),
        ];
        let base = report_angles(vs, &cfg);

        let t = NilTranslation::new(
            rng.gen_range(-1.5..1.5),
            rng.gen_range(-1.5..1.5),
            rng.gen_range(-1.5..1.5),
        );
        let translated = report_angles([t.apply(vs[0]), t.apply(vs[1]), t.apply(vs[2])], &cfg);
        let omega = rng.gen_range(-3.0..3.0);
        let rotated = report_angles(
            [
                rotate_about_z(vs[0], omega),
                rotate_about_z(vs[1], omega),
                rotate_about_z(vs[2], omega),
            ],
            &cfg,
        );
        let reflected = report_angles(
            [
                reflect_y_axis(vs[0]),
                reflect_y_axis(vs[1]),
                reflect_y_axis(vs[2]),
            ],
            &cfg,
        );
        for i in 0..3 {
            assert!((base[i] - translated[i]).abs() < 1e-8, "translation moved ω{i}");
            assert!((base[i] - rotated[i]).abs() < 1e-8, "rotation moved ω{i}");
            assert!((base[i] - reflected[i]).abs() < 1e-8, "reflection moved ω{i}");
        }
    }
}

#[test]
#[allow(clippy::needless_range_loop)]
fn origin_angles_equal_metric_angles_at_the_vertex() {
    // ω_i measured at the origin equals the metric angle of the
    // pushed-forward tangents at A_i itself
    let cfg = SolverConfig::default();
    let mut rng = rng();
    for _ in 0..4 {
        let vs = [
            random_point(&mut rng),
            random_point(&mut rng),
            random_point(&mut rng),
        ];
        let tri = Triangle::new(vs[0], vs[1], vs[2]).unwrap();
        let report = triangle_report(&tri, &cfg).unwrap();
        for i in 0..3 {
            let [j, k] = match i {
                0 => [1, 2],
                1 => [0, 2],
                _ => [0, 1],
            };
            let shift = translation_to(vs[i]);
            let u = shift.pushforward(unit_tangent_at_origin(report.directed(i, j).dir));
            let v = shift.pushforward(unit_tangent_at_origin(report.directed(i, k).dir));
            let metric_angle = angle_between(u, v, vs[i]).unwrap();
            assert!(
                (metric_angle - report.angles[i]).abs() < 1e-9,
                "vertex {i}: {metric_angle} vs {}",
                report.angles[i]
            );
        }
    }
}
