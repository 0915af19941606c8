//! `nilgeo` — distances, geodesics, triangle angle sums and family scans
//! in Nil geometry.
//!
//! Results go to stdout (or `--out FILE`), diagnostics to stderr.
//! Exit codes: 0 success, 1 usage or precondition error, 2 solver failure.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nil_geometry::{
    classify_examples, family_scan, find_pi_sum, sample_geodesic, triangle_report, Family,
    FixedParam, GeodesicArc, GeodesicDirection, NilError, NilPoint, SolverConfig, Triangle,
};
use output::Format;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "nilgeo",
    about = "Geodesics, distances and triangle angle sums in Nil geometry",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Write the result to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolverFlags {
    /// Endpoint position tolerance.
    #[arg(long = "solver-tol", default_value_t = 1e-10)]
    solver_tol: f64,
    /// Newton iteration cap per start.
    #[arg(long = "solver-max-iters", default_value_t = 60)]
    solver_max_iters: usize,
    /// Heading grid size of the multi-start.
    #[arg(long = "solver-alpha-grid", default_value_t = 24)]
    solver_alpha_grid: usize,
    /// Pitch grid size of the multi-start.
    #[arg(long = "solver-theta-grid", default_value_t = 17)]
    solver_theta_grid: usize,
    /// Arc-length window as a multiple of the Euclidean guess.
    #[arg(long = "solver-s-window", default_value_t = 4.0)]
    solver_s_window: f64,
    /// Bound on |w·s| (fold window).
    #[arg(long = "solver-ws-bound", default_value_t = std::f64::consts::TAU - 1e-6)]
    solver_ws_bound: f64,
    /// Finite-difference step of the Jacobian.
    #[arg(long = "solver-fd-step", default_value_t = 1e-7)]
    solver_fd_step: f64,
}

impl SolverFlags {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            position_tolerance: self.solver_tol,
            max_newton_iterations: self.solver_max_iters,
            alpha_grid: self.solver_alpha_grid,
            theta_grid: self.solver_theta_grid,
            s_window_multiplier: self.solver_s_window,
            ws_window_bound: self.solver_ws_bound,
            fd_step: self.solver_fd_step,
        }
    }
}

fn parse_point(s: &str) -> Result<NilPoint, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected x,y,z got '{s}'"));
    }
    let mut c = [0.0; 3];
    for (slot, part) in c.iter_mut().zip(&parts) {
        *slot = part
            .parse::<f64>()
            .map_err(|e| format!("bad coordinate '{part}': {e}"))?;
    }
    if !c.iter().all(|v| v.is_finite()) {
        return Err(format!("coordinates must be finite, got '{s}'"));
    }
    Ok(NilPoint::new(c[0], c[1], c[2]))
}

/// Two comma-separated reals, e.g. a family parameter pair.
#[derive(Clone, Copy, Debug)]
struct Pair(f64, f64);

fn parse_pair(s: &str) -> Result<Pair, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected two comma-separated values, got '{s}'"));
    }
    let a = parts[0]
        .parse::<f64>()
        .map_err(|e| format!("bad value '{}': {e}", parts[0]))?;
    let b = parts[1]
        .parse::<f64>()
        .map_err(|e| format!("bad value '{}': {e}", parts[1]))?;
    Ok(Pair(a, b))
}

/// Parameter grid `a:b:n` — n evenly spaced values from a to b.
#[derive(Clone, Debug)]
struct Grid(Vec<f64>);

fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected a:b:n, got '{s}'"));
    }
    let a: f64 = parts[0].parse().map_err(|e| format!("bad start: {e}"))?;
    let b: f64 = parts[1].parse().map_err(|e| format!("bad end: {e}"))?;
    let n: usize = parts[2].parse().map_err(|e| format!("bad count: {e}"))?;
    if n == 0 {
        return Err("grid needs at least one point".into());
    }
    if n == 1 {
        return Ok(Grid(vec![a]));
    }
    Ok(Grid(
        (0..n)
            .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
            .collect(),
    ))
}

/// `name=value` with name one of x3, y, z.
fn parse_fixed(s: &str) -> Result<FixedParam, String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got '{s}'"))?;
    let v: f64 = value
        .parse()
        .map_err(|e| format!("bad value '{value}': {e}"))?;
    match name {
        "x3" => Ok(FixedParam::X3(v)),
        "y" => Ok(FixedParam::Y(v)),
        "z" => Ok(FixedParam::Z(v)),
        other => Err(format!("unknown parameter '{other}' (use x3, y or z)")),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Fibre,
    Hyperbolic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    Table1,
    Table2,
    Table3,
}

fn preset_scan(p: Preset) -> (Family, FixedParam, Vec<f64>) {
    match p {
        Preset::Table1 => (
            Family::Fibre,
            FixedParam::Z(0.5),
            vec![0.001, 1.0 / 3.0, 1.0, 4.0, 15.0, 100.0],
        ),
        Preset::Table2 => (
            Family::Hyperbolic,
            FixedParam::X3(0.5),
            vec![0.01, 1.0 / 3.0, 3.0, 6.0, 20.0, 100.0],
        ),
        Preset::Table3 => (
            Family::Hyperbolic,
            FixedParam::Y(1.0 / 3.0),
            vec![0.01, 1.0 / 3.0, 3.0, 6.0, 20.0, 100.0],
        ),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Geodesic distance between two points.
    Distance {
        /// Start point as x,y,z.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        from: NilPoint,
        /// End point as x,y,z.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        to: NilPoint,
        #[command(flatten)]
        common: CommonOpts,
        #[command(flatten)]
        solver: SolverFlags,
    },
    /// Interior angles and angle sum of a geodesic triangle.
    Triangle {
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        a1: NilPoint,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        a2: NilPoint,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        a3: NilPoint,
        #[command(flatten)]
        common: CommonOpts,
        #[command(flatten)]
        solver: SolverFlags,
    },
    /// Sample a geodesic from the origin into a t,x,y,z polyline (CSV).
    Geodesic {
        /// Heading angle in radians.
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        /// Pitch angle in radians.
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        /// Arc length.
        #[arg(long)]
        length: f64,
        /// Number of segments (the polyline has samples+1 rows).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        samples: u32,
        /// Write the polyline to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Family scans: built-in presets or a custom parameter sweep.
    Table {
        /// Built-in parameter grid.
        #[arg(long, value_enum, conflicts_with_all = ["family", "fixed", "vary"])]
        preset: Option<Preset>,
        /// Triangle family for a custom scan.
        #[arg(long, value_enum, requires = "fixed", requires = "vary")]
        family: Option<FamilyArg>,
        /// Fixed parameter, e.g. z=0.5 or x3=0.5 or y=0.333333.
        #[arg(long, value_parser = parse_fixed, requires = "family")]
        fixed: Option<FixedParam>,
        /// Varying parameter grid as a:b:n.
        #[arg(long, value_parser = parse_grid, requires = "family", allow_hyphen_values = true)]
        vary: Option<Grid>,
        /// Append the symbolic limit rows of the scanned family.
        #[arg(long)]
        with_limits: bool,
        #[command(flatten)]
        common: CommonOpts,
        #[command(flatten)]
        solver: SolverFlags,
    },
    /// Bisect between a base-plane and a fibre configuration to a triangle
    /// with angle sum exactly pi.
    FindPi {
        /// Base-plane endpoint as x3,y (angle sum below pi).
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        hyperbolic: Pair,
        /// Fibre endpoint as x3,z (angle sum above pi).
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        fibre: Pair,
        /// Tolerance on |angle sum - pi|.
        #[arg(long, default_value_t = 1e-6, allow_hyphen_values = true)]
        tol: f64,
        #[command(flatten)]
        common: CommonOpts,
        #[command(flatten)]
        solver: SolverFlags,
    },
    /// One triangle of each class: angle sum above, below and equal to pi.
    Classify {
        #[command(flatten)]
        common: CommonOpts,
        #[command(flatten)]
        solver: SolverFlags,
    },
}

fn exit_code_for(err: &NilError) -> i32 {
    if err.is_solver_failure() {
        2
    } else {
        1
    }
}

fn deliver(text: String, out: Option<&PathBuf>) -> i32 {
    match out {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("nilgeo: cannot write {}: {e}", path.display());
                1
            }
        },
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()) {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("nilgeo: cannot write to stdout: {e}");
                    1
                }
            }
        }
    }
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Distance {
            from,
            to,
            common,
            solver,
        } => match nil_geometry::distance(from, to, &solver.config()) {
            Ok(d) => deliver(
                output::distance_doc(from, to, d, common.format),
                common.out.as_ref(),
            ),
            Err(e) => {
                eprintln!("nilgeo: {e}");
                exit_code_for(&e)
            }
        },
        Command::Triangle {
            a1,
            a2,
            a3,
            common,
            solver,
        } => {
            let report =
                Triangle::new(a1, a2, a3).and_then(|t| triangle_report(&t, &solver.config()));
            match report {
                Ok(r) => deliver(output::triangle_doc(&r, common.format), common.out.as_ref()),
                Err(e) => {
                    eprintln!("nilgeo: {e}");
                    exit_code_for(&e)
                }
            }
        }
        Command::Geodesic {
            alpha,
            theta,
            length,
            samples,
            out,
        } => {
            if !(alpha.is_finite() && theta.is_finite() && length.is_finite() && length >= 0.0) {
                eprintln!("nilgeo: alpha and theta must be finite, length non-negative");
                return 1;
            }
            let arc = GeodesicArc::new(
                NilPoint::ORIGIN,
                GeodesicDirection::new(alpha, theta),
                length,
            );
            let pts = sample_geodesic(&arc, samples as usize);
            deliver(output::polyline_doc(length, &pts), out.as_ref())
        }
        Command::Table {
            preset,
            family,
            fixed,
            vary,
            with_limits,
            common,
            solver,
        } => {
            let (family, fixed, grid) = match (preset, family, fixed, vary) {
                (Some(p), None, None, None) => preset_scan(p),
                (None, Some(f), Some(fx), Some(g)) => {
                    let family = match f {
                        FamilyArg::Fibre => Family::Fibre,
                        FamilyArg::Hyperbolic => Family::Hyperbolic,
                    };
                    (family, fx, g.0)
                }
                _ => {
                    eprintln!("nilgeo: use either --preset or all of --family, --fixed, --vary");
                    return 1;
                }
            };
            match family_scan(family, fixed, &grid, &solver.config()) {
                Ok(rows) => {
                    let any_failed = rows.iter().any(|r| r.row.is_err());
                    let doc = output::table_doc(family, fixed, &rows, with_limits, common.format);
                    let code = deliver(doc, common.out.as_ref());
                    if code != 0 {
                        code
                    } else if any_failed {
                        2
                    } else {
                        0
                    }
                }
                Err(e) => {
                    eprintln!("nilgeo: {e}");
                    exit_code_for(&e)
                }
            }
        }
        Command::FindPi {
            hyperbolic,
            fibre,
            tol,
            common,
            solver,
        } => {
            let result = find_pi_sum(
                (hyperbolic.0, hyperbolic.1),
                (fibre.0, fibre.1),
                tol,
                &solver.config(),
            );
            match result {
                Ok(r) => deliver(output::pi_sum_doc(&r, common.format), common.out.as_ref()),
                Err(e) => {
                    eprintln!("nilgeo: {e}");
                    exit_code_for(&e)
                }
            }
        }
        Command::Classify { common, solver } => match classify_examples(&solver.config()) {
            Ok(r) => deliver(output::classify_doc(&r, common.format), common.out.as_ref()),
            Err(e) => {
                eprintln!("nilgeo: {e}");
                exit_code_for(&e)
            }
        },
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}
