//! Rendering of result documents. Tables and plain scalars print with six
//! decimals; JSON and polylines carry full precision. All output is a pure
//! function of the inputs, so identical invocations give identical bytes.

use clap::ValueEnum;
use nil_geometry::{
    ClassifiedExamples, Family, FixedParam, NilPoint, PiSumResult, ScanRow, TriangleReport,
};
use serde::Serialize;
use std::f64::consts::PI;
use std::fmt::Write;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

fn f6(v: f64) -> String {
    format!("{v:.6}")
}

fn full(v: f64) -> String {
    format!("{v}")
}

fn point_csvish(p: NilPoint) -> String {
    format!("{},{},{}", full(p.x), full(p.y), full(p.z))
}

fn json_doc<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable document");
    s.push('\n');
    s
}

pub fn distance_doc(from: NilPoint, to: NilPoint, d: f64, format: Format) -> String {
    match format {
        Format::Plain => format!("{}\n", f6(d)),
        Format::Csv => format!("distance\n{}\n", f6(d)),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                from: NilPoint,
                to: NilPoint,
                distance: f64,
            }
            json_doc(&Doc {
                from,
                to,
                distance: d,
            })
        }
    }
}

pub fn triangle_doc(report: &TriangleReport, format: Format) -> String {
    match format {
        Format::Json => json_doc(report),
        Format::Csv => {
            let mut s = String::from("omega1,omega2,omega3,angle_sum,d12,d13,d23\n");
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{}",
                f6(report.angles[0]),
                f6(report.angles[1]),
                f6(report.angles[2]),
                f6(report.angle_sum),
                f6(report.side_lengths[0]),
                f6(report.side_lengths[1]),
                f6(report.side_lengths[2]),
            );
            s
        }
        Format::Plain => {
            let mut s = String::new();
            for (i, v) in report.vertices.iter().enumerate() {
                let _ = writeln!(s, "A{} = {}", i + 1, point_csvish(*v));
            }
            for i in 0..3 {
                let _ = writeln!(s, "omega{} = {}", i + 1, f6(report.angles[i]));
            }
            let _ = writeln!(s, "angle_sum = {}", f6(report.angle_sum));
            let _ = writeln!(
                s,
                "d12 = {}  d13 = {}  d23 = {}",
                f6(report.side_lengths[0]),
                f6(report.side_lengths[1]),
                f6(report.side_lengths[2]),
            );
            s
        }
    }
}

/// CSV polyline `t,x,y,z` at full precision; `t` is recomputed exactly the
/// same way the sampler spaces its points.
pub fn polyline_doc(length: f64, pts: &[NilPoint]) -> String {
    let n = pts.len() - 1;
    let mut s = String::from("t,x,y,z\n");
    for (i, p) in pts.iter().enumerate() {
        let t = length * (i as f64 / n as f64);
        let _ = writeln!(s, "{},{},{},{}", full(t), full(p.x), full(p.y), full(p.z));
    }
    s
}

const TABLE_HEADER: [&str; 6] = ["param", "abs_theta", "d13", "omega1", "omega3", "angle_sum"];

fn row_cells(row: &ScanRow) -> [String; 6] {
    match &row.row {
        Ok(r) => [
            f6(r.param),
            f6(r.pitch_origin),
            f6(r.d13),
            f6(r.omega1),
            f6(r.omega3),
            f6(r.angle_sum),
        ],
        Err(_) => [
            f6(row.param),
            "FAIL".into(),
            "FAIL".into(),
            "FAIL".into(),
            "FAIL".into(),
            "FAIL".into(),
        ],
    }
}

/// Symbolic limit rows for the scanned family, matching the limit
/// statements of the angle-sum lemmas; `None` when the combination has no
/// limit statement (fibre family with varying z).
fn limit_rows(family: Family, fixed: FixedParam) -> Option<[[String; 6]; 2]> {
    let arrow_zero = "->0".to_string();
    let arrow_inf = "->inf".to_string();
    let arrow_pi = "->pi".to_string();
    let arrow_half_pi = "->pi/2".to_string();
    match (family, fixed) {
        // x3 -> 0 turns the far side into the fibre segment itself
        (Family::Fibre, FixedParam::Z(z)) => Some([
            [
                arrow_zero.clone(),
                arrow_half_pi.clone(),
                f6(z),
                arrow_zero.clone(),
                arrow_half_pi,
                arrow_pi.clone(),
            ],
            [
                arrow_inf.clone(),
                arrow_zero.clone(),
                arrow_inf,
                "->pi/2".into(),
                arrow_zero,
                arrow_pi,
            ],
        ]),
        // y -> 0 collapses onto the straight segment of length x3
        (Family::Hyperbolic, FixedParam::X3(x3)) => Some([
            [
                arrow_zero.clone(),
                arrow_zero.clone(),
                f6(x3),
                arrow_half_pi.clone(),
                arrow_zero.clone(),
                arrow_pi.clone(),
            ],
            [
                arrow_inf.clone(),
                arrow_zero.clone(),
                arrow_inf,
                arrow_zero,
                arrow_half_pi,
                arrow_pi,
            ],
        ]),
        // x3 -> 0 collapses onto the straight segment of length y
        (Family::Hyperbolic, FixedParam::Y(y)) => Some([
            [
                arrow_zero.clone(),
                arrow_zero.clone(),
                f6(y),
                arrow_zero.clone(),
                arrow_half_pi.clone(),
                arrow_pi.clone(),
            ],
            [
                arrow_inf.clone(),
                arrow_zero.clone(),
                arrow_inf,
                arrow_half_pi,
                arrow_zero,
                arrow_pi,
            ],
        ]),
        _ => None,
    }
}

fn family_name(family: Family) -> &'static str {
    match family {
        Family::Fibre => "fibre",
        Family::Hyperbolic => "hyperbolic",
    }
}

pub fn table_doc(
    family: Family,
    fixed: FixedParam,
    rows: &[ScanRow],
    with_limits: bool,
    format: Format,
) -> String {
    let limits = if with_limits {
        limit_rows(family, fixed)
    } else {
        None
    };
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                family: &'static str,
                fixed: FixedParam,
                rows: &'a [ScanRow],
                #[serde(skip_serializing_if = "Option::is_none")]
                limits: Option<[[String; 6]; 2]>,
            }
            json_doc(&Doc {
                family: family_name(family),
                fixed,
                rows,
                limits,
            })
        }
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "{}", TABLE_HEADER.join(","));
            if let Some(l) = &limits {
                let _ = writeln!(s, "{}", l[0].join(","));
            }
            for row in rows {
                let _ = writeln!(s, "{}", row_cells(row).join(","));
            }
            if let Some(l) = &limits {
                let _ = writeln!(s, "{}", l[1].join(","));
            }
            s
        }
        Format::Plain => {
            let mut table: Vec<[String; 6]> = Vec::new();
            table.push(TABLE_HEADER.map(String::from));
            if let Some(l) = &limits {
                table.push(l[0].clone());
            }
            table.extend(rows.iter().map(row_cells));
            if let Some(l) = &limits {
                table.push(l[1].clone());
            }
            let mut widths = [0usize; 6];
            for row in &table {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let mut s = String::new();
            for row in &table {
                let line: Vec<String> = row
                    .iter()
                    .zip(widths)
                    .map(|(cell, w)| format!("{cell:>w$}"))
                    .collect();
                let _ = writeln!(s, "{}", line.join("  "));
            }
            s
        }
    }
}

pub fn pi_sum_doc(result: &PiSumResult, format: Format) -> String {
    let gap = (result.report.angle_sum - PI).abs();
    match format {
        Format::Json => json_doc(result),
        Format::Csv => {
            let mut s = String::from("t_e,omega1,omega2,omega3,angle_sum,abs_gap\n");
            let _ = writeln!(
                s,
                "{},{},{},{},{},{:.3e}",
                full(result.t),
                f6(result.report.angles[0]),
                f6(result.report.angles[1]),
                f6(result.report.angles[2]),
                full(result.report.angle_sum),
                gap,
            );
            s
        }
        Format::Plain => {
            let mut s = String::new();
            let _ = writeln!(s, "t_E = {}", full(result.t));
            for (i, v) in result.report.vertices.iter().enumerate() {
                let _ = writeln!(s, "A{} = {}", i + 1, point_csvish(*v));
            }
            for i in 0..3 {
                let _ = writeln!(s, "omega{} = {}", i + 1, f6(result.report.angles[i]));
            }
            let _ = writeln!(s, "angle_sum = {}", full(result.report.angle_sum));
            let _ = writeln!(s, "|angle_sum - pi| = {gap:.3e}");
            let _ = writeln!(
                s,
                "endpoint sums: hyperbolic = {}  fibre = {}",
                f6(result.hyperbolic_sum),
                f6(result.fibre_sum),
            );
            s
        }
    }
}

pub fn classify_doc(out: &ClassifiedExamples, format: Format) -> String {
    match format {
        Format::Json => json_doc(out),
        Format::Csv => {
            let mut s = String::from("class,angle_sum\n");
            let _ = writeln!(s, "greater,{}", f6(out.greater.angle_sum));
            let _ = writeln!(s, "less,{}", f6(out.less.angle_sum));
            let _ = writeln!(s, "equal,{}", f6(out.equal.report.angle_sum));
            s
        }
        Format::Plain => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "greater: fibre-like (x3=1, z=0.5): angle_sum = {} > pi",
                f6(out.greater.angle_sum),
            );
            let _ = writeln!(
                s,
                "less: base-plane (x3=0.5, y=3): angle_sum = {} < pi",
                f6(out.less.angle_sum),
            );
            let _ = writeln!(
                s,
                "equal: interpolated at t_E = {}: angle_sum = {} (|sum - pi| = {:.3e})",
                full(out.equal.t),
                f6(out.equal.report.angle_sum),
                (out.equal.report.angle_sum - PI).abs(),
            );
            s
        }
    }
}
