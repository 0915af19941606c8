//! Reference data shared between the integration and acceptance suites:
//! frozen five-decimal table values for the two right-angled triangle
//! families.

use nil_geometry::TableRow;

#[derive(Clone, Copy, Debug)]
pub struct ReferenceRow {
    pub param: f64,
    pub pitch: f64,
    pub d13: f64,
    pub omega1: f64,
    pub omega3: f64,
    pub sum: f64,
}

/// Fibre-like family at z = 1/2, parametrized by x3.
/// (Reference cells kept verbatim; one of them rounds to π/2.)
#[allow(clippy::approx_constant)]
pub const TABLE1: [ReferenceRow; 6] = [
    ReferenceRow { param: 0.001, pitch: 1.56878, d13: 0.50000, omega1: 0.00202, omega3: 1.56884, sum: 3.14166 },
    ReferenceRow { param: 1.0 / 3.0, pitch: 0.97374, d13: 0.59901, omega1: 0.59705, omega3: 0.99435, sum: 3.16220 },
    ReferenceRow { param: 1.0, pitch: 0.42883, d13: 1.10937, omega1: 1.14197, omega3: 0.48351, sum: 3.19627 },
    ReferenceRow { param: 4.0, pitch: 0.05337, d13: 4.01337, omega1: 1.51743, omega3: 0.11957, sum: 3.20779 },
    ReferenceRow { param: 15.0, pitch: 0.00169, d13: 15.00042, omega1: 1.56911, omega3: 0.01277, sum: 3.15268 },
    ReferenceRow { param: 100.0, pitch: 0.00001, d13: 100.00000, omega1: 1.57079, omega3: 0.00030, sum: 3.14189 },
];

/// Base-plane family at x3 = 1/2, parametrized by y.
pub const TABLE2: [ReferenceRow; 6] = [
    ReferenceRow { param: 0.01, pitch: 0.00490, d13: 0.50011, omega1: 1.54958, omega3: 0.01940, sum: 3.13977 },
    ReferenceRow { param: 1.0 / 3.0, pitch: 0.13378, d13: 0.60651, omega1: 0.94882, omega3: 0.56204, sum: 3.08166 },
    ReferenceRow { param: 3.0, pitch: 0.13700, d13: 3.09310, omega1: 0.14449, omega3: 1.19813, sum: 2.91342 },
    ReferenceRow { param: 6.0, pitch: 0.06132, d13: 6.06701, omega1: 0.11959, omega3: 1.30229, sum: 2.99268 },
    ReferenceRow { param: 20.0, pitch: 0.00726, d13: 20.02442, omega1: 0.04828, omega3: 1.47308, sum: 3.09216 },
    ReferenceRow { param: 100.0, pitch: 0.00030, d13: 100.00500, omega1: 0.00999, omega3: 1.55082, sum: 3.13160 },
];

/// Base-plane family at y = 1/3, parametrized by x3.
pub const TABLE3: [ReferenceRow; 6] = [
    ReferenceRow { param: 0.01, pitch: 0.00495, d13: 0.33349, omega1: 0.02958, omega3: 1.53998, sum: 3.14036 },
    ReferenceRow { param: 1.0 / 3.0, pitch: 0.11518, d13: 0.47461, omega1: 0.76510, omega3: 0.76510, sum: 3.10100 },
    ReferenceRow { param: 3.0, pitch: 0.09346, d13: 3.04190, omega1: 1.31933, omega3: 0.09854, sum: 2.98866 },
    ReferenceRow { param: 6.0, pitch: 0.04131, d13: 6.02995, omega1: 1.39094, omega3: 0.08042, sum: 3.04215 },
    ReferenceRow { param: 20.0, pitch: 0.00485, d13: 20.01086, omega1: 1.50562, omega3: 0.03222, sum: 3.10863 },
    ReferenceRow { param: 100.0, pitch: 0.00020, d13: 100.00222, omega1: 1.55748, omega3: 0.00666, sum: 3.13493 },
];

/// Cell-by-cell comparison; returns human-readable mismatches.
pub fn row_mismatches(got: &TableRow, want: &ReferenceRow, tol: f64) -> Vec<String> {
    let mut out = Vec::new();
    let param = want.param;
    let mut check = |name: &str, actual: f64, expected: f64| {
        if (actual - expected).abs() > tol {
            out.push(format!(
                "param {param}: {name} = {actual:.6} expected {expected:.6}"
            ));
        }
    };
    check("|theta|", got.pitch_origin, want.pitch);
    check("d13", got.d13, want.d13);
    check("omega1", got.omega1, want.omega1);
    check("omega3", got.omega3, want.omega3);
    check("angle_sum", got.angle_sum, want.sum);
    out
}
