//! Exact algebra of the projective Nil model: points, right translations,
//! the metric tensor, isometries and angle measurement.
//!
//! A point `(x, y, z)` is the affine chart of the homogeneous row vector
//! `(1; x, y, z)`. Right translations act on homogeneous rows by the 4×4
//! shear matrix returned by [`NilTranslation::matrix`]; everything here is
//! closed-form, no numerics beyond plain arithmetic.

use serde::Serialize;

use crate::error::{NilError, Result};

/// A point of Nil in affine coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NilPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl NilPoint {
    pub const ORIGIN: NilPoint = NilPoint {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        NilPoint { x, y, z }
    }

    /// Homogeneous row `(1; x, y, z)`; only needed at the matrix-action
    /// boundary.
    pub fn to_homogeneous(self) -> [f64; 4] {
        [1.0, self.x, self.y, self.z]
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Euclidean norm of the coordinate triple (model coordinates, not the
    /// Nil distance).
    pub fn coord_norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Euclidean separation of the coordinate triples.
    pub fn coord_distance(self, other: NilPoint) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

impl std::fmt::Display for NilPoint {
    /// At least 12 significant digits per coordinate.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:.12e}, {:.12e}, {:.12e})", self.x, self.y, self.z)
    }
}

/// A right translation with parameters `(a, b, c)`: the isometry taking the
/// origin to the point `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NilTranslation {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl NilTranslation {
    pub const IDENTITY: NilTranslation = NilTranslation {
        a: 0.0,
        b: 0.0,
        c: 0.0,
    };

    pub fn new(a: f64, b: f64, c: f64) -> Self {
        NilTranslation { a, b, c }
    }

    /// The 4×4 matrix acting on homogeneous rows from the right.
    pub fn matrix(self) -> [[f64; 4]; 4] {
        [
            [1.0, self.a, self.b, self.c],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, self.a],
            [0.0, 0.0, 0.0, 1.0],
        ]
    }

    /// Group composition; `self` acts first, `second` after.
    pub fn then(self, second: NilTranslation) -> NilTranslation {
        NilTranslation {
            a: self.a + second.a,
            b: self.b + second.b,
            c: self.c + second.c + self.b * second.a,
        }
    }

    /// Closed-form inverse `(-a, -b, ab - c)`.
    pub fn inverse(self) -> NilTranslation {
        NilTranslation {
            a: -self.a,
            b: -self.b,
            c: self.a * self.b - self.c,
        }
    }

    /// Action on a point: `(p, q, r) ↦ (a + p, b + q, c + q·a + r)`.
    ///
    /// Identifying points with group elements, this is the same formula as
    /// [`NilTranslation::then`] with the point acting first.
    pub fn apply(self, p: NilPoint) -> NilPoint {
        NilPoint {
            x: self.a + p.x,
            y: self.b + p.y,
            z: self.c + p.y * self.a + p.z,
        }
    }

    /// Differential of the affine action; the Jacobian is independent of
    /// the base point, so a tangent vector anywhere may be pushed forward.
    pub fn pushforward(self, v: TangentVector) -> TangentVector {
        TangentVector {
            v1: v.v1,
            v2: v.v2,
            v3: v.v3 + self.a * v.v2,
            base: self.apply(v.base),
        }
    }
}

/// The translation taking the origin to `p`.
pub fn translation_to(p: NilPoint) -> NilTranslation {
    NilTranslation {
        a: p.x,
        b: p.y,
        c: p.z,
    }
}

/// Composition with `first` acting first (`first.then(second)`).
pub fn compose(first: NilTranslation, second: NilTranslation) -> NilTranslation {
    first.then(second)
}

/// A tangent vector with components in the coordinate frame at `base`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TangentVector {
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
    pub base: NilPoint,
}

impl TangentVector {
    pub fn new(v1: f64, v2: f64, v3: f64, base: NilPoint) -> Self {
        TangentVector { v1, v2, v3, base }
    }

    pub fn at_origin(v1: f64, v2: f64, v3: f64) -> Self {
        TangentVector::new(v1, v2, v3, NilPoint::ORIGIN)
    }

    pub fn components(self) -> [f64; 3] {
        [self.v1, self.v2, self.v3]
    }

    pub fn euclidean_norm(self) -> f64 {
        (self.v1 * self.v1 + self.v2 * self.v2 + self.v3 * self.v3).sqrt()
    }

    /// Norm under the metric at the vector's own base point.
    pub fn g_norm(self) -> f64 {
        metric_at(self.base).norm(self.components())
    }

    pub fn scale(self, k: f64) -> TangentVector {
        TangentVector::new(k * self.v1, k * self.v2, k * self.v3, self.base)
    }
}

/// The metric tensor at a point; only the first coordinate enters.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct MetricTensor {
    /// First coordinate of the evaluation point.
    pub x: f64,
}

impl MetricTensor {
    /// Component matrix `g_ij`.
    pub fn matrix(self) -> [[f64; 3]; 3] {
        let x = self.x;
        [
            [1.0, 0.0, 0.0],
            [0.0, 1.0 + x * x, -x],
            [0.0, -x, 1.0],
        ]
    }

    /// Component matrix of the inverse `g^ij`.
    pub fn inverse(self) -> [[f64; 3]; 3] {
        let x = self.x;
        [
            [1.0, 0.0, 0.0],
            [0.0, 1.0, x],
            [0.0, x, 1.0 + x * x],
        ]
    }

    /// Determinant computed from the actual component matrix.
    pub fn det(self) -> f64 {
        let g = self.matrix();
        g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
            - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
            + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    }

    /// Inner product `u^i g_ij v^j`, evaluated in the cancellation-free
    /// form `u1·v1 + u2·v2 + (u3 − x·u2)(v3 − x·v2)`.
    pub fn inner(self, u: [f64; 3], v: [f64; 3]) -> f64 {
        u[0] * v[0] + u[1] * v[1] + (u[2] - self.x * u[1]) * (v[2] - self.x * v[1])
    }

    pub fn norm(self, v: [f64; 3]) -> f64 {
        self.inner(v, v).sqrt()
    }
}

/// Metric tensor at `p`.
pub fn metric_at(p: NilPoint) -> MetricTensor {
    MetricTensor { x: p.x }
}

/// Angle in `[0, π]` between two tangent vectors at `p`.
///
/// The result is symmetric in `(u, v)` and invariant under positive
/// scaling; orientation of the tangents is the caller's business (interior
/// angles use tangents pointing away from the vertex).
pub fn angle_between(u: TangentVector, v: TangentVector, p: NilPoint) -> Result<f64> {
    let g = metric_at(p);
    let nu = g.norm(u.components());
    let nv = g.norm(v.components());
    if nu == 0.0 || nv == 0.0 || !nu.is_finite() || !nv.is_finite() {
        return Err(NilError::ZeroVector);
    }
    let cos = g.inner(u.components(), v.components()) / (nu * nv);
    Ok(cos.clamp(-1.0, 1.0).acos())
}

/// Rotation about the z axis at the origin through angle `omega`; an
/// isometry that is quadratic in `(x, y)` on the z coordinate.
pub fn rotate_about_z(p: NilPoint, omega: f64) -> NilPoint {
    let (s, c) = omega.sin_cos();
    let (s2, c2) = (2.0 * omega).sin_cos();
    let (x, y, z) = (p.x, p.y, p.z);
    NilPoint {
        x: x * c - y * s,
        y: x * s + y * c,
        z: z - 0.5 * x * y + 0.25 * (x * x - y * y) * s2 + 0.5 * x * y * c2,
    }
}

/// Differential of [`rotate_about_z`] at `v.base`, applied to `v`.
pub fn rotate_tangent_about_z(v: TangentVector, omega: f64) -> TangentVector {
    let (s, c) = omega.sin_cos();
    let (s2, c2) = (2.0 * omega).sin_cos();
    let (x, y) = (v.base.x, v.base.y);
    let dz_dx = -0.5 * y + 0.5 * x * s2 + 0.5 * y * c2;
    let dz_dy = -0.5 * x - 0.5 * y * s2 + 0.5 * x * c2;
    TangentVector {
        v1: v.v1 * c - v.v2 * s,
        v2: v.v1 * s + v.v2 * c,
        v3: dz_dx * v.v1 + dz_dy * v.v2 + v.v3,
        base: rotate_about_z(v.base, omega),
    }
}

/// Direction of the quadratic change of coordinates conjugating the
/// rotation above to a linear one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadraticDirection {
    /// `z ↦ z − ½·x·y` (into the linearized chart).
    Forward,
    /// `z ↦ z + ½·x·y` (back to the model chart).
    Backward,
}

/// The quadratic mapping and its inverse; `Backward ∘ Forward` is the
/// identity.
pub fn quadratic_map(p: NilPoint, direction: QuadraticDirection) -> NilPoint {
    let shift = 0.5 * p.x * p.y;
    let z = match direction {
        QuadraticDirection::Forward => p.z - shift,
        QuadraticDirection::Backward => p.z + shift,
    };
    NilPoint { x: p.x, y: p.y, z }
}

/// Involutive line reflection about the y axis: `(x, y, z) ↦ (−x, y, −z)`.
pub fn reflect_y_axis(p: NilPoint) -> NilPoint {
    NilPoint {
        x: -p.x,
        y: p.y,
        z: -p.z,
    }
}

/// Differential of [`reflect_y_axis`] (a constant linear map).
pub fn reflect_y_axis_tangent(v: TangentVector) -> TangentVector {
    TangentVector {
        v1: -v.v1,
        v2: v.v2,
        v3: -v.v3,
        base: reflect_y_axis(v.base),
    }
}
