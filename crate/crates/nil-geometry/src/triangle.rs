//! Geodesic triangles: interior angles via the translate-to-origin
//! procedure, the fibre-like and hyperbolic-like right-angled families,
//! parameter scans, and the bisection search for an angle sum of exactly π.
//!
//! The interior angle at a vertex is measured by translating that vertex
//! to the origin (an isometry), solving the boundary-value problem to the
//! two translated opposite vertices, and taking the Euclidean angle of the
//! two unit tangents — at the origin the metric is the identity, so the
//! Euclidean angle is the Nil angle.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{NilError, Result};
use crate::geodesic::{unit_tangent_at_origin, GeodesicArc, GeodesicDirection};
use crate::model::{translation_to, NilPoint};
use crate::shooting::{shoot, SolverConfig};

/// Minimal Euclidean coordinate separation for vertices to count as
/// distinct.
pub const VERTEX_SEPARATION: f64 = 1e-12;

/// Three pairwise distinct vertices.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Triangle {
    pub a1: NilPoint,
    pub a2: NilPoint,
    pub a3: NilPoint,
}

impl Triangle {
    pub fn new(a1: NilPoint, a2: NilPoint, a3: NilPoint) -> Result<Self> {
        let ok = a1.coord_distance(a2) > VERTEX_SEPARATION
            && a1.coord_distance(a3) > VERTEX_SEPARATION
            && a2.coord_distance(a3) > VERTEX_SEPARATION;
        if !ok {
            return Err(NilError::DegenerateTriangle);
        }
        Ok(Triangle { a1, a2, a3 })
    }

    pub fn vertices(&self) -> [NilPoint; 3] {
        [self.a1, self.a2, self.a3]
    }
}

/// The minimal geodesic from vertex `from` toward vertex `to`, expressed
/// in the frame that translates `from` to the origin.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DirectedGeodesic {
    /// 0-based vertex indices.
    pub from: usize,
    pub to: usize,
    pub dir: GeodesicDirection,
    /// Arc length (the side length when minimal).
    pub length: f64,
    /// Solver endpoint residual.
    pub residual: f64,
    /// Pitch θ of the outgoing tangent; `|pitch|` is the angle to the
    /// base plane.
    pub pitch: f64,
    /// How many distinct geodesics the solver found for this pair.
    pub multiplicity: usize,
}

/// Full description of a solved geodesic triangle.
#[derive(Clone, Debug, Serialize)]
pub struct TriangleReport {
    pub vertices: [NilPoint; 3],
    /// Ordered pairs (0,1), (0,2), (1,0), (1,2), (2,0), (2,1).
    pub directed: Vec<DirectedGeodesic>,
    /// `[d(A1,A2), d(A1,A3), d(A2,A3)]`, taken from the lower-index frame.
    pub side_lengths: [f64; 3],
    /// Interior angles `ω1, ω2, ω3`.
    pub angles: [f64; 3],
    pub angle_sum: f64,
}

impl TriangleReport {
    pub fn directed(&self, from: usize, to: usize) -> &DirectedGeodesic {
        self.directed
            .iter()
            .find(|d| d.from == from && d.to == to)
            .expect("all six ordered pairs are present")
    }

    /// The side from `from` to `to` as an arc in the `from` frame.
    pub fn side_arc(&self, from: usize, to: usize) -> GeodesicArc {
        let d = self.directed(from, to);
        GeodesicArc::new(self.vertices[from], d.dir, d.length)
    }

    pub fn pitch_abs(&self, from: usize, to: usize) -> f64 {
        self.directed(from, to).pitch.abs()
    }
}

fn directed_geodesic(
    vertices: &[NilPoint; 3],
    from: usize,
    to: usize,
    cfg: &SolverConfig,
) -> Result<DirectedGeodesic> {
    let target = translation_to(vertices[from]).inverse().apply(vertices[to]);
    let sols = shoot(target, cfg).map_err(|e| NilError::UnsolvableSide {
        from: from + 1,
        to: to + 1,
        source: Box::new(e),
    })?;
    let best = sols[0];
    Ok(DirectedGeodesic {
        from,
        to,
        dir: best.dir,
        length: best.s,
        residual: best.residual,
        pitch: best.dir.theta(),
        multiplicity: sols.len(),
    })
}

/// Solve all six directed sides and measure the interior angles.
pub fn triangle_report(t: &Triangle, cfg: &SolverConfig) -> Result<TriangleReport> {
    let vertices = t.vertices();
    let pairs = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
    let directed = pairs
        .iter()
        .map(|&(i, j)| directed_geodesic(&vertices, i, j, cfg))
        .collect::<Result<Vec<_>>>()?;

    let tangent = |from: usize, to: usize| {
        let d = directed
            .iter()
            .find(|d| d.from == from && d.to == to)
            .expect("pair present");
        unit_tangent_at_origin(d.dir)
    };
    let mut angles = [0.0; 3];
    for (i, slot) in angles.iter_mut().enumerate() {
        let [j, k] = match i {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        };
        let u = tangent(i, j);
        let v = tangent(i, k);
        let dot = u.v1 * v.v1 + u.v2 * v.v2 + u.v3 * v.v3;
        let cos = dot / (u.euclidean_norm() * v.euclidean_norm());
        *slot = cos.clamp(-1.0, 1.0).acos();
    }

    let length = |from: usize, to: usize| {
        directed
            .iter()
            .find(|d| d.from == from && d.to == to)
            .expect("pair present")
            .length
    };
    Ok(TriangleReport {
        vertices,
        side_lengths: [length(0, 1), length(0, 2), length(1, 2)],
        angle_sum: angles.iter().sum(),
        angles,
        directed,
    })
}

fn positive_finite(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(NilError::InvalidInput(format!(
            "{name} must be positive and finite, got {v}"
        )))
    }
}

/// Right-angled triangle with one side on a fibre line: vertices
/// `(0,0,0)`, `(0,0,z)`, `(x3,0,z)`. The right angle sits at the second
/// vertex.
pub fn fibre_like_triangle(x3: f64, z: f64, cfg: &SolverConfig) -> Result<TriangleReport> {
    positive_finite("x3", x3)?;
    positive_finite("z", z)?;
    let t = Triangle::new(
        NilPoint::ORIGIN,
        NilPoint::new(0.0, 0.0, z),
        NilPoint::new(x3, 0.0, z),
    )?;
    triangle_report(&t, cfg)
}

/// Right-angled triangle in the base plane: vertices `(0,0,0)`, `(0,y,0)`,
/// `(x3,y,0)`. The right angle sits at the second vertex.
pub fn hyperbolic_like_triangle(x3: f64, y: f64, cfg: &SolverConfig) -> Result<TriangleReport> {
    positive_finite("x3", x3)?;
    positive_finite("y", y)?;
    let t = Triangle::new(
        NilPoint::ORIGIN,
        NilPoint::new(0.0, y, 0.0),
        NilPoint::new(x3, y, 0.0),
    )?;
    triangle_report(&t, cfg)
}

/// The two right-angled families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    Fibre,
    Hyperbolic,
}

/// Which parameter of the family is held fixed; the other one varies.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum FixedParam {
    X3(f64),
    Y(f64),
    Z(f64),
}

/// One table row: varying parameter, pitch columns, side length and
/// angles.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TableRow {
    pub param: f64,
    /// `|θ|` of the side A1→A3 seen from the A1 frame.
    pub pitch_origin: f64,
    /// `|θ|` of the side A3→A1 seen from the A3 frame (equal to the above
    /// up to solver precision; reported separately).
    pub pitch_far: f64,
    pub d13: f64,
    pub omega1: f64,
    pub omega3: f64,
    pub angle_sum: f64,
}

impl TableRow {
    pub fn from_report(param: f64, report: &TriangleReport) -> Self {
        TableRow {
            param,
            pitch_origin: report.pitch_abs(0, 2),
            pitch_far: report.pitch_abs(2, 0),
            d13: report.side_lengths[1],
            omega1: report.angles[0],
            omega3: report.angles[2],
            angle_sum: report.angle_sum,
        }
    }
}

/// A scan row; solver failures stay in-row instead of aborting the scan.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub param: f64,
    pub row: std::result::Result<TableRow, String>,
}

/// Evaluate one family triangle for a (family, fixed, varying) binding.
fn family_triangle(
    family: Family,
    fixed: FixedParam,
    varying: f64,
    cfg: &SolverConfig,
) -> Result<TriangleReport> {
    match (family, fixed) {
        (Family::Fibre, FixedParam::Z(z)) => fibre_like_triangle(varying, z, cfg),
        (Family::Fibre, FixedParam::X3(x3)) => fibre_like_triangle(x3, varying, cfg),
        (Family::Hyperbolic, FixedParam::X3(x3)) => hyperbolic_like_triangle(x3, varying, cfg),
        (Family::Hyperbolic, FixedParam::Y(y)) => hyperbolic_like_triangle(varying, y, cfg),
        (Family::Fibre, FixedParam::Y(_)) => Err(NilError::InvalidInput(
            "the fibre family has parameters x3 and z".into(),
        )),
        (Family::Hyperbolic, FixedParam::Z(_)) => Err(NilError::InvalidInput(
            "the base-plane family has parameters x3 and y".into(),
        )),
    }
}

/// Scan a family over a parameter grid. Rows are computed independently
/// (and in parallel); output order follows the grid.
pub fn family_scan(
    family: Family,
    fixed: FixedParam,
    grid: &[f64],
    cfg: &SolverConfig,
) -> Result<Vec<ScanRow>> {
    // reject invalid bindings up front; per-row numeric trouble stays in-row
    match (family, fixed) {
        (Family::Fibre, FixedParam::Y(_)) | (Family::Hyperbolic, FixedParam::Z(_)) => {
            family_triangle(family, fixed, 1.0, cfg).map(|_| ())?
        }
        _ => {}
    }
    Ok(grid
        .par_iter()
        .map(|&param| ScanRow {
            param,
            row: family_triangle(family, fixed, param, cfg)
                .map(|r| TableRow::from_report(param, &r))
                .map_err(|e| e.to_string()),
        })
        .collect())
}

/// Result of the π-angle-sum bisection.
#[derive(Clone, Debug, Serialize)]
pub struct PiSumResult {
    /// Interpolation parameter in `(0, 1)`; 0 is the base-plane endpoint,
    /// 1 the fibre endpoint.
    pub t: f64,
    pub hyperbolic_sum: f64,
    pub fibre_sum: f64,
    pub report: TriangleReport,
}

fn lerp(a: NilPoint, b: NilPoint, t: f64) -> NilPoint {
    NilPoint::new(
        a.x + t * (b.x - a.x),
        a.y + t * (b.y - a.y),
        a.z + t * (b.z - a.z),
    )
}

/// Bisection core over the interpolated vertex pairs; requires the angle
/// sum at `t = 0` below π and at `t = 1` above π.
fn bisect_pi_between(
    a2_low: NilPoint,
    a3_low: NilPoint,
    a2_high: NilPoint,
    a3_high: NilPoint,
    tol: f64,
    cfg: &SolverConfig,
) -> Result<PiSumResult> {
    let report_at = |t: f64| -> Result<TriangleReport> {
        let tri = Triangle::new(
            NilPoint::ORIGIN,
            lerp(a2_low, a2_high, t),
            lerp(a3_low, a3_high, t),
        )?;
        triangle_report(&tri, cfg)
    };

    let pi = std::f64::consts::PI;
    let low_report = report_at(0.0)?;
    let high_report = report_at(1.0)?;
    if !(low_report.angle_sum < pi && high_report.angle_sum > pi) {
        return Err(NilError::NoStraddle {
            hyperbolic_sum: low_report.angle_sum,
            fibre_sum: high_report.angle_sum,
        });
    }

    let (mut lo, mut hi) = (0.0, 1.0);
    let mut best = f64::INFINITY;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let report = report_at(mid)?;
        let gap = report.angle_sum - pi;
        best = best.min(gap.abs());
        if gap.abs() <= tol {
            return Ok(PiSumResult {
                t: mid,
                hyperbolic_sum: low_report.angle_sum,
                fibre_sum: high_report.angle_sum,
                report,
            });
        }
        if gap < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(NilError::BisectionFailure { tol, best })
}

/// Find a proper triangle with interior angle sum exactly π (to `tol`) by
/// bisecting along the straight-line interpolation between a base-plane
/// configuration `(x3, y)` with sum < π and a fibre configuration
/// `(x3, z)` with sum > π. Both moving vertices are interpolated in the
/// affine model coordinates; only continuity of the angle sum is used
/// (the interpolated triangles are not right-angled).
pub fn find_pi_sum(
    hyperbolic: (f64, f64),
    fibre: (f64, f64),
    tol: f64,
    cfg: &SolverConfig,
) -> Result<PiSumResult> {
    positive_finite("tolerance", tol)?;
    let (x3h, yh) = hyperbolic;
    let (x3f, zf) = fibre;
    positive_finite("hyperbolic x3", x3h)?;
    positive_finite("hyperbolic y", yh)?;
    positive_finite("fibre x3", x3f)?;
    positive_finite("fibre z", zf)?;

    bisect_pi_between(
        NilPoint::new(0.0, yh, 0.0),
        NilPoint::new(x3h, yh, 0.0),
        NilPoint::new(0.0, 0.0, zf),
        NilPoint::new(x3f, 0.0, zf),
        tol,
        cfg,
    )
}

/// One triangle of each class: angle sum above, below, and equal to π.
#[derive(Clone, Debug, Serialize)]
pub struct ClassifiedExamples {
    /// Fibre-like right triangle `(x3, z) = (1, 1/2)`; sum ≈ 3.19627 > π.
    pub greater: TriangleReport,
    /// Base-plane right triangle `(x3, y) = (1/2, 3)`; sum ≈ 2.91342 < π.
    pub less: TriangleReport,
    /// Bisection between the two; sum = π ± 1e-6.
    pub equal: PiSumResult,
}

/// Demonstrates that the angle sum can be greater, less, or equal to π.
pub fn classify_examples(cfg: &SolverConfig) -> Result<ClassifiedExamples> {
    let greater = fibre_like_triangle(1.0, 0.5, cfg)?;
    let less = hyperbolic_like_triangle(0.5, 3.0, cfg)?;
    let equal = find_pi_sum((0.5, 3.0), (1.0, 0.5), 1e-6, cfg)?;
    Ok(ClassifiedExamples {
        greater,
        less,
        equal,
    })
}
