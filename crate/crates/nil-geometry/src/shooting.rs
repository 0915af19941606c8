//! Geodesic boundary-value problem: find `(alpha, theta, s)` so that the
//! unit-speed geodesic from the origin hits a target point.
//!
//! The forward map folds (conjugate points appear at `w·s = 2π`), so a
//! single Newton start is not enough; the solver launches a grid of
//! damped-Newton iterations over heading × pitch and merges the converged
//! roots. Distances between arbitrary points reduce to this by
//! translating the first point to the origin.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{NilError, Result};
use crate::geodesic::{smooth_point, unit_tangent_at_origin, wrap_heading, GeodesicDirection};
use crate::model::{translation_to, NilPoint, TangentVector};

/// Tuning of the multi-start damped-Newton solver.
#[derive(Clone, Debug, Serialize)]
pub struct SolverConfig {
    /// Euclidean endpoint miss distance below which a start counts as
    /// converged. Floored internally at a small multiple of machine
    /// epsilon times the squared target scale, which only matters for
    /// targets at coordinate scale beyond a few hundred.
    pub position_tolerance: f64,
    /// Newton iteration cap per start.
    pub max_newton_iterations: usize,
    /// Number of heading cells over `[-π, π)`.
    pub alpha_grid: usize,
    /// Number of pitch cells over `(-π/2, π/2)`.
    pub theta_grid: usize,
    /// Arc length is kept below this multiple of the Euclidean guess.
    pub s_window_multiplier: f64,
    /// Search stays inside `|w·s| <` this bound (first fold window).
    pub ws_window_bound: f64,
    /// Step for the central-difference Jacobian.
    pub fd_step: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            position_tolerance: 1e-10,
            max_newton_iterations: 60,
            alpha_grid: 24,
            theta_grid: 17,
            s_window_multiplier: 4.0,
            ws_window_bound: std::f64::consts::TAU - 1e-6,
            fd_step: 1e-7,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("position_tolerance", self.position_tolerance),
            ("s_window_multiplier", self.s_window_multiplier),
            ("ws_window_bound", self.ws_window_bound),
            ("fd_step", self.fd_step),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(NilError::InvalidInput(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        if self.max_newton_iterations == 0 {
            return Err(NilError::InvalidInput(
                "max_newton_iterations must be positive".into(),
            ));
        }
        if self.alpha_grid < 2 || self.theta_grid < 2 {
            return Err(NilError::InvalidInput(
                "grid sizes must be at least 2".into(),
            ));
        }
        Ok(())
    }
}

/// One solved boundary-value problem.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ShootingSolution {
    pub dir: GeodesicDirection,
    /// Arc length of the connecting geodesic.
    pub s: f64,
    /// Euclidean miss distance at the endpoint.
    pub residual: f64,
    /// Flattened index of the multi-start cell that converged here.
    pub branch: usize,
}

const THETA_LIMIT: f64 = std::f64::consts::FRAC_PI_2 - 1e-9;
const AXIS_RADIUS: f64 = 1e-12;
const DEDUP_TOL: f64 = 1e-6;
const LINE_SEARCH_HALVINGS: usize = 40;
const POLISH_ITERATIONS: usize = 4;

fn residual_vec(state: [f64; 3], target: NilPoint) -> [f64; 3] {
    let p = smooth_point(state[0], state[1], state[2]);
    [p.x - target.x, p.y - target.y, p.z - target.z]
}

fn norm3(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

fn clamp_state(mut state: [f64; 3], s_max: f64, ws_bound: f64) -> [f64; 3] {
    state[1] = state[1].clamp(-THETA_LIMIT, THETA_LIMIT);
    state[2] = state[2].clamp(0.0, s_max);
    let w = state[1].sin().abs();
    if w * state[2] > ws_bound {
        state[2] = ws_bound / w;
    }
    state
}

fn jacobian(state: [f64; 3], target: NilPoint, h: f64) -> nalgebra::Matrix3<f64> {
    let mut j = nalgebra::Matrix3::zeros();
    for col in 0..3 {
        let mut plus = state;
        let mut minus = state;
        plus[col] += h;
        minus[col] -= h;
        let fp = residual_vec(plus, target);
        let fm = residual_vec(minus, target);
        for row in 0..3 {
            j[(row, col)] = (fp[row] - fm[row]) / (2.0 * h);
        }
    }
    j
}

struct StartOutcome {
    converged: Option<[f64; 3]>,
    residual: f64,
}

fn newton_from(
    start: [f64; 3],
    target: NilPoint,
    cfg: &SolverConfig,
    tol: f64,
    s_max: f64,
) -> StartOutcome {
    let mut state = clamp_state(start, s_max, cfg.ws_window_bound);
    let mut rn = norm3(residual_vec(state, target));
    let mut polish_left = POLISH_ITERATIONS;

    for _ in 0..cfg.max_newton_iterations + POLISH_ITERATIONS {
        if rn < tol {
            if polish_left == 0 {
                break;
            }
            polish_left -= 1;
        }
        let j = jacobian(state, target, cfg.fd_step);
        let r = residual_vec(state, target);
        let rhs = -nalgebra::Vector3::new(r[0], r[1], r[2]);
        let delta = match j.lu().solve(&rhs) {
            Some(d) => d,
            // fold or pole: fall back to a least-squares step
            None => match j.svd(true, true).solve(&rhs, 1e-14) {
                Ok(d) => d,
                Err(_) => break,
            },
        };
        if !delta.iter().all(|d| d.is_finite()) {
            break;
        }

        let mut factor = 1.0;
        let mut accepted = false;
        for _ in 0..LINE_SEARCH_HALVINGS {
            let cand = clamp_state(
                [
                    state[0] + factor * delta[0],
                    state[1] + factor * delta[1],
                    state[2] + factor * delta[2],
                ],
                s_max,
                cfg.ws_window_bound,
            );
            let rc = norm3(residual_vec(cand, target));
            if rc < rn {
                state = cand;
                rn = rc;
                accepted = true;
                break;
            }
            factor *= 0.5;
        }
        if !accepted {
            break;
        }
    }

    StartOutcome {
        converged: (rn < tol).then_some(state),
        residual: rn,
    }
}

/// All geodesics from the origin to `target` found inside the fold window,
/// de-duplicated and sorted by ascending arc length.
///
/// Targets on the z axis are handled by the exact fibre branch. Fails with
/// [`NilError::SolverFailure`] if no start converges, and with
/// [`NilError::OriginTarget`] for the origin itself.
pub fn shoot(target: NilPoint, cfg: &SolverConfig) -> Result<Vec<ShootingSolution>> {
    cfg.validate()?;
    if !target.is_finite() {
        return Err(NilError::InvalidInput("target must be finite".into()));
    }
    if target.x == 0.0 && target.y == 0.0 && target.z == 0.0 {
        return Err(NilError::OriginTarget);
    }

    if target.x.hypot(target.y) < AXIS_RADIUS {
        let dir = GeodesicDirection::fibre(target.z.signum());
        return Ok(vec![ShootingSolution {
            dir,
            s: target.z.abs(),
            residual: target.x.hypot(target.y),
            branch: 0,
        }]);
    }

    // the z component of the forward map cancels terms of size ~|target|²,
    // so that is the evaluation noise scale; the floor is inactive for
    // targets below coordinate scale ~3e2
    let euclid = target.coord_norm();
    let tol = cfg
        .position_tolerance
        .max(4.0 * f64::EPSILON * (1.0 + euclid * euclid));
    let s_max = cfg.s_window_multiplier * euclid;

    let starts: Vec<(usize, [f64; 3])> = (0..cfg.alpha_grid)
        .flat_map(|i| {
            let alpha0 =
                -std::f64::consts::PI + (i as f64 + 0.5) * std::f64::consts::TAU / cfg.alpha_grid as f64;
            (0..cfg.theta_grid).map(move |k| {
                let theta0 = -std::f64::consts::FRAC_PI_2
                    + (k as f64 + 0.5) * std::f64::consts::PI / cfg.theta_grid as f64;
                (i * cfg.theta_grid + k, [alpha0, theta0, euclid])
            })
        })
        .collect();

    let outcomes: Vec<(usize, StartOutcome)> = starts
        .par_iter()
        .map(|&(branch, start)| (branch, newton_from(start, target, cfg, tol, s_max)))
        .collect();

    let mut converged: Vec<ShootingSolution> = Vec::new();
    let mut best_residual = f64::INFINITY;
    for (branch, outcome) in outcomes {
        best_residual = best_residual.min(outcome.residual);
        if let Some(state) = outcome.converged {
            converged.push(ShootingSolution {
                dir: GeodesicDirection::new(state[0], state[1]),
                s: state[2],
                residual: outcome.residual,
                branch,
            });
        }
    }
    if converged.is_empty() {
        return Err(NilError::SolverFailure {
            best_residual,
            x: target.x,
            y: target.y,
            z: target.z,
        });
    }

    converged.sort_by(|a, b| {
        a.s.total_cmp(&b.s)
            .then(a.dir.alpha().total_cmp(&b.dir.alpha()))
            .then(a.dir.theta().total_cmp(&b.dir.theta()))
            .then(a.residual.total_cmp(&b.residual))
    });

    let mut unique: Vec<ShootingSolution> = Vec::new();
    for sol in converged {
        match unique.iter_mut().find(|u| {
            wrap_heading(sol.dir.alpha() - u.dir.alpha()).abs() < DEDUP_TOL
                && (sol.dir.theta() - u.dir.theta()).abs() < DEDUP_TOL
                && (sol.s - u.s).abs() < DEDUP_TOL
        }) {
            Some(u) => {
                if sol.residual < u.residual {
                    *u = sol;
                }
            }
            None => unique.push(sol),
        }
    }
    Ok(unique)
}

/// Arc length of the minimal geodesic between two points.
pub fn distance(p: NilPoint, q: NilPoint, cfg: &SolverConfig) -> Result<f64> {
    if p == q {
        return Ok(0.0);
    }
    let target = translation_to(p).inverse().apply(q);
    if target.x == 0.0 && target.y == 0.0 && target.z == 0.0 {
        return Ok(0.0);
    }
    Ok(shoot(target, cfg)?[0].s)
}

/// Direction of the minimal geodesic from `p` to `q`, expressed in the
/// frame translating `p` to the origin, together with its unit tangent.
pub fn initial_direction(
    p: NilPoint,
    q: NilPoint,
    cfg: &SolverConfig,
) -> Result<(GeodesicDirection, TangentVector)> {
    let target = translation_to(p).inverse().apply(q);
    if p == q || (target.x == 0.0 && target.y == 0.0 && target.z == 0.0) {
        return Err(NilError::InvalidInput(
            "initial_direction needs two distinct points".into(),
        ));
    }
    let dir = shoot(target, cfg)?[0].dir;
    Ok((dir, unit_tangent_at_origin(dir)))
}
