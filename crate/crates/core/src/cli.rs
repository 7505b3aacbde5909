//! Command-line front end: parameter sweeps over the Bloch grid,
//! single-point demos, and the verification-suite runner.
//!
//! Exit codes follow one convention across subcommands: 0 on success,
//! 1 when a tolerance or suite check fails, 2 for usage and I/O errors.

use crate::error::{Error, Result};
use crate::measures::{mixedness, skew_information};
use crate::premeasure::{premeasure_state, PremeasurementSetup};
use crate::qubit_analytic::{bloch_grid, scan_point};
use crate::states::{
    density_from_bloch, pvm_from_observable, spherical_to_cartesian, Observable, SphericalBloch,
};
use crate::verify;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

/// Output format for sweep files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Everything a sweep needs: grid shape, gate, destination.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n_steps: usize,
    pub theta_steps: usize,
    pub phi_values: Vec<f64>,
    pub tolerance: f64,
    pub output_path: PathBuf,
    pub format: Format,
}

impl SweepConfig {
    fn validate(&self) -> Result<()> {
        if self.n_steps < 2 || self.theta_steps < 2 {
            return Err(Error::OutOfRange(format!(
                "need at least 2 steps per axis (got --n-steps {} --theta-steps {})",
                self.n_steps, self.theta_steps
            )));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::OutOfRange(format!(
                "tolerance must be positive (got {})",
                self.tolerance
            )));
        }
        Ok(())
    }
}

/// One line of sweep output: grid coordinates, both skew paths, the
/// mixedness, both negativity paths, and their gap.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepRow {
    pub n: f64,
    pub theta: f64,
    pub phi: f64,
    pub skew_closed: f64,
    pub skew_numeric: f64,
    pub mixedness: f64,
    pub negativity_closed: f64,
    pub negativity_numeric: f64,
    pub abs_diff: f64,
}

/// What a sweep produced, for the caller to judge against the gate.
#[derive(Debug, Clone, Copy)]
pub struct SweepSummary {
    pub rows: usize,
    pub max_abs_diff: f64,
}

/// Folds negative zero into plain zero so residual signs of clamped
/// quantities never reach an output file in either format.
fn fold_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

fn sweep_row(s: &SphericalBloch, sigma_z: &Observable) -> Result<SweepRow> {
    let point = scan_point(s)?;
    let rho = density_from_bloch(&spherical_to_cartesian(s))?;
    let skew_numeric = skew_information(&rho, sigma_z)?;
    Ok(SweepRow {
        n: point.n,
        theta: point.theta,
        phi: point.phi,
        skew_closed: fold_zero(point.skew),
        skew_numeric: fold_zero(skew_numeric),
        mixedness: fold_zero(point.mixedness),
        negativity_closed: fold_zero(point.negativity_closed),
        negativity_numeric: fold_zero(point.negativity_numeric),
        abs_diff: fold_zero(point.residual()),
    })
}

/// Evaluates the whole grid in lexicographic (n, θ, φ) order.
pub fn sweep_rows(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let sigma_z = Observable::new(crate::states::pauli_z())?;
    bloch_grid(config.n_steps, config.theta_steps, &config.phi_values)?
        .iter()
        .map(|s| sweep_row(s, &sigma_z))
        .collect()
}

/// 17 significant digits: round-trip safe for 64-bit floats, so the
/// file reproduces the run bit for bit. Folds negative zero again so
/// the CSV contract holds for any rows, not just ones from sweep_row.
fn fmt_field(x: f64) -> String {
    let x = fold_zero(x);
    format!("{x:.16e}")
}

const CSV_HEADER: &str =
    "n,theta,phi,skew_closed,skew_numeric,mixedness,negativity_closed,negativity_numeric,abs_diff";

fn write_csv(rows: &[SweepRow], out: &mut impl Write) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            fmt_field(r.n),
            fmt_field(r.theta),
            fmt_field(r.phi),
            fmt_field(r.skew_closed),
            fmt_field(r.skew_numeric),
            fmt_field(r.mixedness),
            fmt_field(r.negativity_closed),
            fmt_field(r.negativity_numeric),
            fmt_field(r.abs_diff),
        )?;
    }
    Ok(())
}

fn write_json(rows: &[SweepRow], out: &mut impl Write) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, rows)
        .map_err(|e| Error::Io(format!("JSON serialization failed: {e}")))?;
    writeln!(out)?;
    Ok(())
}

/// Runs the sweep and writes the output file. The file is written even
/// when the gate fails; the summary carries the worst gap so the caller
/// can pick the exit status.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary> {
    let rows = sweep_rows(config)?;
    let file = File::create(&config.output_path)
        .map_err(|e| Error::Io(format!("cannot create {}: {e}", config.output_path.display())))?;
    let mut writer = BufWriter::new(file);
    match config.format {
        Format::Csv => write_csv(&rows, &mut writer)?,
        Format::Json => write_json(&rows, &mut writer)?,
    }
    writer.flush()?;
    let max_abs_diff = rows.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    Ok(SweepSummary {
        rows: rows.len(),
        max_abs_diff,
    })
}

fn fmt_matrix(m: &crate::linalg::ComplexMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        out.push_str("    ");
        for j in 0..m.cols() {
            let z = m[(i, j)];
            out.push_str(&format!("{:>9.6}{:+9.6}i  ", z.re, z.im));
        }
        out.push('\n');
    }
    out
}

/// Single-point report: the input state, the premeasurement output, and
/// every scalar along both computational paths. Returns whether the
/// closed-form relation held at 1e-9.
pub fn run_demo(n: f64, theta: f64, phi: f64, out: &mut impl Write) -> Result<bool> {
    let s = SphericalBloch::new(n, theta, phi)?;
    let b = spherical_to_cartesian(&s);
    let rho = density_from_bloch(&b)?;
    let setup = PremeasurementSetup::new(pvm_from_observable(&Observable::new(
        crate::states::pauli_z(),
    )?)?);
    let joint = premeasure_state(&rho, &setup)?;
    let point = scan_point(&s)?;
    let sigma_z = Observable::new(crate::states::pauli_z())?;
    let skew_numeric = skew_information(&rho, &sigma_z)?;
    let mixedness_numeric = mixedness(&rho);

    writeln!(out, "input qubit")?;
    writeln!(out, "  n = {n}, theta = {theta} rad, phi = {phi} rad")?;
    writeln!(
        out,
        "  Bloch vector ({:.12}, {:.12}, {:.12})",
        b.n_x, b.n_y, b.n_z
    )?;
    writeln!(out, "  rho_in:")?;
    write!(out, "{}", fmt_matrix(rho.matrix()))?;
    writeln!(out, "premeasurement output (sigma_z, pointer starts at |0>)")?;
    writeln!(out, "  joint state, system x apparatus ordering:")?;
    write!(out, "{}", fmt_matrix(joint.matrix()))?;
    writeln!(out, "scalars")?;
    writeln!(
        out,
        "  skew information   closed {:.12}   numeric {:.12}",
        point.skew, skew_numeric
    )?;
    writeln!(
        out,
        "  mixedness          closed {:.12}   numeric {:.12}",
        point.mixedness, mixedness_numeric
    )?;
    writeln!(
        out,
        "  negativity         closed {:.12}   numeric {:.12}",
        point.negativity_closed, point.negativity_numeric
    )?;
    let holds = point.residual() <= 1e-9;
    writeln!(
        out,
        "relation: |closed - numeric| = {:.3e} at tolerance 1e-9: {}",
        point.residual(),
        if holds { "holds" } else { "VIOLATED" }
    )?;
    let verdict = if (point.negativity_numeric - 0.5).abs() <= 1e-9 {
        "the premeasurement output is maximally entangled (negativity 1/2)"
    } else if point.negativity_numeric <= 1e-12 {
        "the premeasurement output carries zero entanglement"
    } else {
        "the premeasurement output is partially entangled"
    };
    writeln!(out, "verdict: {verdict}")?;
    Ok(holds)
}

/// Runs every verification suite and prints one line per suite plus a
/// summary. Returns whether all suites passed.
pub fn run_verify(seed: u64, cases: usize, out: &mut impl Write) -> Result<bool> {
    if cases == 0 {
        return Err(Error::OutOfRange("--cases must be at least 1".into()));
    }
    let reports = verify::run_all(seed, cases);
    writeln!(
        out,
        "{:<28} {:>7} {:>15} {:>11}   result",
        "suite", "cases", "worst residual", "tolerance"
    )?;
    for r in &reports {
        writeln!(
            out,
            "{:<28} {:>7} {:>15.3e} {:>11.1e}   {}",
            r.name,
            r.cases,
            r.worst_residual,
            r.tolerance,
            if r.passed { "PASS" } else { "FAIL" }
        )?;
    }
    let passed = verify::all_passed(&reports);
    let n_passed = reports.iter().filter(|r| r.passed).count();
    writeln!(
        out,
        "{}/{} suites passed (seed {seed}, {cases} cases)",
        n_passed,
        reports.len()
    )?;
    Ok(passed)
}

#[derive(Parser, Debug)]
#[command(
    name = "premeasure",
    version,
    about = "Premeasurement entanglement vs skew information and mixedness: sweeps, demos, verification"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the (n, theta, phi) grid and write CSV or JSON rows
    Sweep {
        /// Number of Bloch-length steps spanning [0, 1]
        #[arg(long, default_value_t = 11)]
        n_steps: usize,
        /// Number of polar-angle steps spanning [0, pi]
        #[arg(long, default_value_t = 13)]
        theta_steps: usize,
        /// Azimuth values in radians (repeat or comma-separate)
        #[arg(long = "phi", value_delimiter = ',', num_args = 1..,
              default_values_t = vec![0.0, FRAC_PI_2, PI])]
        phi: Vec<f64>,
        /// Gate on max |negativity_closed - negativity_numeric|
        #[arg(long = "tol", default_value_t = 1e-9)]
        tol: f64,
        /// Output file path
        #[arg(long = "out")]
        out: PathBuf,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Report every quantity for a single (n, theta, phi) point
    Demo {
        /// Bloch length in [0, 1]
        n: f64,
        /// Polar angle in radians, [0, pi]
        theta: f64,
        /// Azimuth in radians, [0, 2*pi)
        phi: f64,
    },
    /// Run all verification suites with a fixed seed
    Verify {
        /// PRNG seed shared by all suites
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases per randomized suite
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

/// Parses arguments and dispatches; returns the process exit code.
/// Usage errors exit through clap with status 2.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Sweep {
            n_steps,
            theta_steps,
            phi,
            tol,
            out,
            format,
        } => {
            let config = SweepConfig {
                n_steps,
                theta_steps,
                phi_values: phi,
                tolerance: tol,
                output_path: out,
                format,
            };
            run_sweep(&config).map(|summary| {
                let passed = summary.max_abs_diff <= config.tolerance;
                println!(
                    "wrote {} rows to {}",
                    summary.rows,
                    config.output_path.display()
                );
                println!(
                    "max |negativity_closed - negativity_numeric| = {:.3e} at tolerance {:.1e}: {}",
                    summary.max_abs_diff,
                    config.tolerance,
                    if passed { "PASS" } else { "FAIL" }
                );
                passed
            })
        }
        Command::Demo { n, theta, phi } => {
            let stdout = std::io::stdout();
            run_demo(n, theta, phi, &mut stdout.lock())
        }
        Command::Verify { seed, cases } => {
            let stdout = std::io::stdout();
            run_verify(seed, cases, &mut stdout.lock())
        }
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
