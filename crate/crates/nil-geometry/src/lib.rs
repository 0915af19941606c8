//! Geodesic geometry of Nil (the Heisenberg group) in its projective,
//! affine model.
//!
//! Points live in affine coordinates `(x, y, z)` and the group acts on them
//! by shear-like right translations. The left-invariant metric is
//!
//! ```text
//! ds² = dx² + dy² + (dz − x·dy)²
//! ```
//!
//! On top of the exact algebra ([`model`]) the crate provides closed-form
//! geodesics with an independent ODE integrator as cross-check
//! ([`geodesic`]), a multi-start shooting solver for the geodesic
//! boundary-value problem and distances ([`shooting`]), and geodesic
//! triangle analysis: interior angles, the fibre-like and hyperbolic-like
//! right-angled families, parameter scans and the π-angle-sum search
//! ([`triangle`]).

pub mod error;
pub mod geodesic;
pub mod model;
pub mod shooting;
pub mod triangle;

pub use error::{NilError, Result};
pub use geodesic::{
    christoffel_at, geodesic_point, geodesic_tangent, integrate_geodesic, sample_geodesic,
    unit_tangent_at_origin, ChristoffelTensor, GeodesicArc, GeodesicDirection,
};
pub use model::{
    angle_between, compose, metric_at, quadratic_map, reflect_y_axis, reflect_y_axis_tangent,
    rotate_about_z, rotate_tangent_about_z, translation_to, MetricTensor, NilPoint,
    NilTranslation, QuadraticDirection, TangentVector,
};
pub use shooting::{distance, initial_direction, shoot, ShootingSolution, SolverConfig};
pub use triangle::{
    classify_examples, family_scan, fibre_like_triangle, find_pi_sum, hyperbolic_like_triangle,
    triangle_report, ClassifiedExamples, DirectedGeodesic, Family, FixedParam, PiSumResult,
    ScanRow, TableRow, Triangle, TriangleReport,
};
