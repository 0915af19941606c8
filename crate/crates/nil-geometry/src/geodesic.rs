//! Closed-form geodesics from the origin, and an independent ODE
//! integrator used as a correctness oracle.
//!
//! A unit-speed geodesic from the origin is parametrized by a heading
//! `alpha` and a pitch `theta`, with `c = cos(theta)`, `w = sin(theta)`
//! and initial velocity `(c·cos α, c·sin α, w)`. Unit speed makes the
//! curve parameter the arc length.
//!
//! For `0 < |w| < 1` the curve is a helix:
//!
//! ```text
//! x(t) = (2c/w)·sin(wt/2)·cos(wt/2 + α)
//! y(t) = (2c/w)·sin(wt/2)·sin(wt/2 + α)
//! z(t) = wt + (c²/2w²)·(wt − sin wt) + (c²/w²)·sin²(wt/2)·sin(wt + 2α)
//! ```
//!
//! For `w = 0` the limit is the planar parabola-like curve
//! `(ct·cos α, ct·sin α, ½c²t²·cos α·sin α)`, and `|w| = 1` is the fibre
//! line `(0, 0, wt)`. Near `w = 0` the helix expressions lose precision,
//! so below [`W_SERIES_THRESHOLD`] the singular factors are evaluated by
//! their Taylor expansions instead; the two evaluations agree to ~1e-10
//! at the switch. The z component above is the form that matches the
//! geodesic ODE of the metric (the module's integrator checks it to
//! better than 1e-8).

use serde::Serialize;

use crate::error::{NilError, Result};
use crate::model::{metric_at, translation_to, NilPoint, TangentVector};

/// Below this |w| the planar series evaluation is used.
pub const W_SERIES_THRESHOLD: f64 = 1e-4;

/// Initial data of a unit-speed geodesic from the origin.
///
/// `alpha` is wrapped into `[-π, π)`; at `|theta| = π/2` the heading is
/// meaningless and is normalized to `0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GeodesicDirection {
    alpha: f64,
    theta: f64,
}

fn wrap_angle(a: f64) -> f64 {
    (a + std::f64::consts::PI).rem_euclid(std::f64::consts::TAU) - std::f64::consts::PI
}

impl GeodesicDirection {
    pub fn new(alpha: f64, theta: f64) -> Self {
        let theta = theta.clamp(-std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2);
        let alpha = if theta.sin().abs() == 1.0 {
            0.0
        } else {
            wrap_angle(alpha)
        };
        GeodesicDirection { alpha, theta }
    }

    /// The fibre direction: straight up (`sign > 0`) or down the z axis.
    pub fn fibre(sign: f64) -> Self {
        GeodesicDirection {
            alpha: 0.0,
            theta: std::f64::consts::FRAC_PI_2.copysign(sign),
        }
    }

    pub fn alpha(self) -> f64 {
        self.alpha
    }

    pub fn theta(self) -> f64 {
        self.theta
    }

    /// `w = sin θ`, the vertical velocity component.
    pub fn w(self) -> f64 {
        self.theta.sin()
    }

    /// `c = cos θ`; exactly zero on the fibre branch so that `c² + w² = 1`
    /// holds to machine precision.
    pub fn c(self) -> f64 {
        if self.theta.sin().abs() == 1.0 {
            0.0
        } else {
            self.theta.cos()
        }
    }
}

/// A geodesic segment: initial point, direction in the frame where the
/// start is translated to the origin, and arc length.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GeodesicArc {
    pub start: NilPoint,
    pub dir: GeodesicDirection,
    pub length: f64,
}

impl GeodesicArc {
    pub fn new(start: NilPoint, dir: GeodesicDirection, length: f64) -> Self {
        GeodesicArc { start, dir, length }
    }

    pub fn endpoint(&self) -> NilPoint {
        translation_to(self.start).apply(geodesic_point(self.dir, self.length))
    }
}

/// Helix form, `w != 0`. `1 - cos u` is evaluated as `2 sin²(u/2)` so the
/// expression stays accurate down to the series threshold.
fn helix_point(alpha: f64, c: f64, w: f64, t: f64) -> NilPoint {
    let u = w * t;
    let half = 0.5 * u;
    let radial = 2.0 * c / w * half.sin();
    let x = radial * (half + alpha).cos();
    let y = radial * (half + alpha).sin();
    let cw = c / w;
    let sh = half.sin();
    let z = u + 0.5 * cw * cw * (u - u.sin()) + cw * cw * sh * sh * (u + 2.0 * alpha).sin();
    NilPoint::new(x, y, z)
}

/// Planar form with the singular factors replaced by 4th-order expansions
/// in `u = w·t`; exact at `w = 0`.
fn planar_series_point(alpha: f64, c: f64, w: f64, t: f64) -> NilPoint {
    let u = w * t;
    let half = 0.5 * u;
    let h2 = half * half;
    // sin(h)/h, (u - sin u)/u³, (1 - cos u)/u²
    let sinc_h = 1.0 - h2 / 6.0 + h2 * h2 / 120.0;
    let u2 = u * u;
    let f1 = 1.0 / 6.0 - u2 / 120.0 + u2 * u2 / 5040.0;
    let f2 = 0.5 - u2 / 24.0 + u2 * u2 / 720.0;
    let radial = c * t * sinc_h;
    let x = radial * (half + alpha).cos();
    let y = radial * (half + alpha).sin();
    let z = u + 0.5 * c * c * (w * t * t * t * f1 + t * t * f2 * (u + 2.0 * alpha).sin());
    NilPoint::new(x, y, z)
}

/// Forward map used by the shooting solver: same curve family, but smooth
/// in `theta` all the way to ±π/2 (no exact-fibre special case, which
/// would put a jump of size ~`c·t` into finite-difference Jacobians).
pub(crate) fn smooth_point(alpha: f64, theta: f64, t: f64) -> NilPoint {
    let w = theta.sin();
    let c = theta.cos();
    if w.abs() < W_SERIES_THRESHOLD {
        planar_series_point(alpha, c, w, t)
    } else {
        helix_point(alpha, c, w, t)
    }
}

pub(crate) fn wrap_heading(a: f64) -> f64 {
    wrap_angle(a)
}

/// Point of the unit-speed geodesic with initial data `dir` at arc-length
/// parameter `t`.
pub fn geodesic_point(dir: GeodesicDirection, t: f64) -> NilPoint {
    let w = dir.w();
    if w.abs() == 1.0 {
        return NilPoint::new(0.0, 0.0, w * t);
    }
    let (alpha, c) = (dir.alpha(), dir.c());
    if w.abs() < W_SERIES_THRESHOLD {
        planar_series_point(alpha, c, w, t)
    } else {
        helix_point(alpha, c, w, t)
    }
}

/// Velocity of the geodesic at parameter `t`, based at the curve point.
///
/// Uses the first integrals `ẋ = c·cos(wt+α)`, `ẏ = c·sin(wt+α)` and
/// `ż = w + x·ẏ`; its g-norm is identically 1.
pub fn geodesic_tangent(dir: GeodesicDirection, t: f64) -> TangentVector {
    let w = dir.w();
    if w.abs() == 1.0 {
        return TangentVector::new(0.0, 0.0, w, NilPoint::new(0.0, 0.0, w * t));
    }
    let (alpha, c) = (dir.alpha(), dir.c());
    let p = geodesic_point(dir, t);
    let phase = w * t + alpha;
    let vx = c * phase.cos();
    let vy = c * phase.sin();
    let vz = w + p.x * vy;
    TangentVector::new(vx, vy, vz, p)
}

/// The unit tangent `(c·cos α, c·sin α, w)` at the origin.
pub fn unit_tangent_at_origin(dir: GeodesicDirection) -> TangentVector {
    let (c, w) = (dir.c(), dir.w());
    TangentVector::at_origin(c * dir.alpha().cos(), c * dir.alpha().sin(), w)
}

/// Levi-Civita connection coefficients `Γ^i_jk` at a point with first
/// coordinate `x` (the metric depends on nothing else).
#[derive(Clone, Copy, Debug)]
pub struct ChristoffelTensor {
    gamma: [[[f64; 3]; 3]; 3],
}

impl ChristoffelTensor {
    /// `Γ^i_jk` with the upper index first.
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.gamma[i][j][k]
    }

    /// Contraction `-Γ^i_jk v^j v^k` for the geodesic equation.
    pub fn acceleration(&self, v: [f64; 3]) -> [f64; 3] {
        let mut a = [0.0; 3];
        for (i, gi) in self.gamma.iter().enumerate() {
            let mut s = 0.0;
            for (j, gij) in gi.iter().enumerate() {
                for (k, g) in gij.iter().enumerate() {
                    s += g * v[j] * v[k];
                }
            }
            a[i] = -s;
        }
        a
    }
}

/// Christoffel symbols of the metric; only ∂/∂x of `g` is nonzero, which
/// leaves six independent nonzero entries.
pub fn christoffel_at(x: f64) -> ChristoffelTensor {
    let mut gamma = [[[0.0; 3]; 3]; 3];
    gamma[0][1][1] = -x;
    gamma[0][1][2] = 0.5;
    gamma[0][2][1] = 0.5;
    gamma[1][0][1] = 0.5 * x;
    gamma[1][1][0] = 0.5 * x;
    gamma[1][0][2] = -0.5;
    gamma[1][2][0] = -0.5;
    gamma[2][0][1] = 0.5 * (x * x - 1.0);
    gamma[2][1][0] = 0.5 * (x * x - 1.0);
    gamma[2][0][2] = -0.5 * x;
    gamma[2][2][0] = -0.5 * x;
    ChristoffelTensor { gamma }
}

fn geodesic_rhs(state: &[f64; 6]) -> [f64; 6] {
    let gamma = christoffel_at(state[0]);
    let v = [state[3], state[4], state[5]];
    let a = gamma.acceleration(v);
    [v[0], v[1], v[2], a[0], a[1], a[2]]
}

/// Integrate the geodesic equation `ẍ^i + Γ^i_jk ẋ^j ẋ^k = 0` with a
/// fixed-step classical 4th-order Runge-Kutta scheme.
///
/// The initial velocity is normalized to unit g-norm at `p0`. Returns the
/// endpoint and the full path of `steps + 1` points. This route never
/// touches the closed forms above; it is their cross-check.
pub fn integrate_geodesic(
    p0: NilPoint,
    v0: TangentVector,
    s: f64,
    steps: usize,
) -> Result<(NilPoint, Vec<NilPoint>)> {
    if s < 0.0 {
        return Err(NilError::NegativeArcLength(s));
    }
    if steps == 0 {
        return Err(NilError::InvalidInput("steps must be positive".into()));
    }
    let norm = metric_at(p0).norm(v0.components());
    if norm == 0.0 || !norm.is_finite() {
        return Err(NilError::ZeroVector);
    }
    if s == 0.0 {
        return Ok((p0, vec![p0]));
    }

    let mut state = [
        p0.x,
        p0.y,
        p0.z,
        v0.v1 / norm,
        v0.v2 / norm,
        v0.v3 / norm,
    ];
    let h = s / steps as f64;
    let mut path = Vec::with_capacity(steps + 1);
    path.push(p0);
    for _ in 0..steps {
        let k1 = geodesic_rhs(&state);
        let mut s2 = state;
        for i in 0..6 {
            s2[i] += 0.5 * h * k1[i];
        }
        let k2 = geodesic_rhs(&s2);
        let mut s3 = state;
        for i in 0..6 {
            s3[i] += 0.5 * h * k2[i];
        }
        let k3 = geodesic_rhs(&s3);
        let mut s4 = state;
        for i in 0..6 {
            s4[i] += h * k3[i];
        }
        let k4 = geodesic_rhs(&s4);
        for i in 0..6 {
            state[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        path.push(NilPoint::new(state[0], state[1], state[2]));
    }
    Ok((*path.last().expect("nonempty path"), path))
}

/// `n + 1` points of the arc at uniform arc-length parameters, first the
/// start, last the endpoint. Used for polyline export.
pub fn sample_geodesic(arc: &GeodesicArc, n: usize) -> Vec<NilPoint> {
    let n = n.max(1);
    let shift = translation_to(arc.start);
    (0..=n)
        .map(|i| {
            let t = arc.length * (i as f64 / n as f64);
            shift.apply(geodesic_point(arc.dir, t))
        })
        .collect()
}
