//! Closed-form qubit expressions and the central relation tying
//! premeasurement entanglement to skew information and mixedness.
//!
//! For ρ = ½(𝟙 + n·σ) measured along σ_z, everything reduces to two
//! scalars: the Bloch length n = |n| and the polar angle θ between n and
//! the measurement axis. Writing n̂ for the unit direction,
//!
//!   ℐ(ρ, σ_z)  = (1 − √(1−n²))·(n̂_x² + n̂_y²) = (1 − √(1−n²))·sin²θ
//!   ℳ(ρ)       = ½(1 − n²)
//!   𝒩(ρ_SM)    = n·sinθ/2
//!
//! and eliminating (n, θ) gives the central relation
//!
//!   𝒩 = n·√(ℐ/(1 − √(2ℳ)))/2,   n = √(1 − 2ℳ),
//!
//! so the negativity created by the premeasurement is fully determined by
//! the skew information and the mixedness of the input. None of this is
//! assumed anywhere: the numeric pipeline (eigensolver, partial
//! transpose) is run alongside and the suites hold the two against each
//! other at tight tolerances.
//!
//! A derivation note, since it is easy to trip over: expanding the
//! commutator [√ρ, σ_z] produces the transverse components of the UNIT
//! vector n̂, not of n itself. Folding the raw components into the
//! formula instead (a tempting but wrong simplification) yields
//! (1 − √(1−n²))(n_x² + n_y²), which is the true skew scaled by n² and
//! disagrees with both the definition and the spherical form whenever
//! the state is mixed. The Cartesian form below therefore divides the
//! transverse square by n², in the algebraically equivalent,
//! singularity-free arrangement (n_x² + n_y²)/(1 + √(1−n²)).

use serde::Serialize;

use crate::entangle::negative_eigenvalue_sum;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::premeasure::{premeasure_state, PremeasurementSetup};
use crate::states::{
    density_from_bloch, pvm_from_observable, require_unit_direction, spherical_to_cartesian,
    BlochVector, DensityMatrix, Observable, SphericalBloch,
};
use crate::tolerances;
use num_complex::Complex64;

/// Closed-form skew information ℐ(ρ(n), σ_z) in Cartesian Bloch
/// coordinates: (n_x² + n_y²)/(1 + √(1 − |n|²)).
///
/// The arrangement with the sum in the denominator keeps the formula
/// finite and smooth across the whole ball, including |n| → 0 where the
/// naive (1 − √(1−n²))/n² prefactor is 0/0.
pub fn skew_closed_form_cartesian(b: &BlochVector) -> Result<f64> {
    b.check()?;
    let transverse = b.n_x * b.n_x + b.n_y * b.n_y;
    // |n|^2 may exceed 1 by the ball slack; the sqrt argument is clamped.
    let radial = (1.0 - b.norm_squared()).max(0.0);
    Ok(transverse / (1.0 + pure_floored_sqrt(radial)))
}

/// √(1 − |n|²) with the purity floor: radial distances at rounding
/// scale collapse to exactly 0, mirroring the eigenvalue floor in the
/// numeric square-root path (see `tolerances::PURE_RADIAL_FLOOR` for
/// why the two must regularize identically).
fn pure_floored_sqrt(radial: f64) -> f64 {
    if radial <= tolerances::PURE_RADIAL_FLOOR {
        0.0
    } else {
        radial.sqrt()
    }
}

/// Closed-form skew information in spherical coordinates:
/// (1 − √(1 − n²))·sin²θ. Independent of the azimuth φ, as a σ_z
/// measurement only sees the polar angle.
pub fn skew_closed_form_spherical(s: &SphericalBloch) -> f64 {
    let sin_theta = s.theta.sin();
    (1.0 - pure_floored_sqrt((1.0 - s.n * s.n).max(0.0))) * sin_theta * sin_theta
}

/// Closed-form qubit mixedness ℳ = ½(1 − n²) for Bloch length n.
pub fn mixedness_closed_form(n: f64) -> Result<f64> {
    if !n.is_finite() || !(0.0..=1.0).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "Bloch length n = {n}, expected [0, 1]"
        )));
    }
    Ok(0.5 * (1.0 - n * n))
}

/// The central relation: negativity of the σ_z premeasurement state from
/// the skew information and mixedness of the input qubit,
///
///   𝒩 = n·√(ℐ/(1 − √(2ℳ)))/2,
///
/// which equals n·sinθ/2 whenever the three arguments come from one
/// state. Takes the scalars rather than the state so callers can feed
/// values produced by independent code paths.
///
/// Piecewise at the bottom of the ball: for n at or below 1e-8 the result
/// is 0. The prefactor 1/(1 − √(2ℳ)) diverges as n → 0 while ℐ → 0
/// faster; the analytic limit is 0, and the floor keeps the floating
/// point evaluation out of the 0/0 corner.
pub fn negativity_closed_form(skew: f64, mixedness: f64, n: f64) -> Result<f64> {
    if !skew.is_finite() || !mixedness.is_finite() || !n.is_finite() {
        return Err(Error::InconsistentInputs(format!(
            "non-finite inputs: skew = {skew}, mixedness = {mixedness}, n = {n}"
        )));
    }
    let two_m = 2.0 * mixedness;
    if two_m > 1.0 + 1e-12 {
        return Err(Error::InconsistentInputs(format!(
            "2 * mixedness = {two_m}, impossible for a qubit state (maximum 1)"
        )));
    }
    if two_m < -1e-12 || skew < -1e-12 || n < -1e-12 || n > 1.0 + 1e-12 {
        return Err(Error::InconsistentInputs(format!(
            "skew = {skew}, mixedness = {mixedness}, n = {n} do not describe a qubit state"
        )));
    }
    if n <= tolerances::BLOCH_LENGTH_FLOOR {
        return Ok(0.0);
    }
    // Same purity floor as the closed-form skew: 2M is 1 - n² for a
    // qubit, so the two expressions must collapse to the pure case at
    // the same threshold or the quotient loses their exact cancellation.
    let denominator = 1.0 - pure_floored_sqrt(two_m.clamp(0.0, 1.0));
    if denominator <= 0.0 || skew <= 0.0 {
        // denominator = 0 only at n = 0 (caught by the floor) or within
        // the input slack; skew = 0 means the state commutes with the
        // measurement and nothing gets entangled.
        return Ok(0.0);
    }
    Ok(n * (skew / denominator).sqrt() / 2.0)
}

/// Negativity for an arbitrary measurement direction m (unit vector):
/// ½·√(|n|² − (n·m)²), one half of the Bloch component transverse to m.
///
/// This generalizes the σ_z result by rotational covariance; it is held
/// against the rotated numeric pipeline in the verification suites
/// rather than taken on faith.
pub fn negativity_geometric(b: &BlochVector, m: [f64; 3]) -> Result<f64> {
    b.check()?;
    require_unit_direction(m)?;
    let along = b.n_x * m[0] + b.n_y * m[1] + b.n_z * m[2];
    Ok(0.5 * (b.norm_squared() - along * along).max(0.0).sqrt())
}

/// The σ_z premeasurement state written out entrywise: diagonal
/// (1±n_z)/2 on |00⟩⟨00| and |11⟩⟨11|, corners (n_x ± i n_y)/2 linking
/// them. Matches the isometry construction exactly.
pub fn premeasurement_state_explicit(b: &BlochVector) -> Result<DensityMatrix> {
    b.check()?;
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 0)] = Complex64::new((1.0 + b.n_z) / 2.0, 0.0);
    m[(3, 3)] = Complex64::new((1.0 - b.n_z) / 2.0, 0.0);
    m[(3, 0)] = Complex64::new(b.n_x / 2.0, b.n_y / 2.0);
    m[(0, 3)] = Complex64::new(b.n_x / 2.0, -b.n_y / 2.0);
    DensityMatrix::new(m, vec![2, 2])
}

/// Numeric-pipeline negativity for measuring m·σ on the qubit with Bloch
/// vector b: build the PVM, premeasure, sum the negative eigenvalues of
/// the partial transpose. No closed form is consulted anywhere.
pub fn negativity_numeric_for_direction(b: &BlochVector, m: [f64; 3]) -> Result<f64> {
    let rho = density_from_bloch(b)?;
    let setup = PremeasurementSetup::new(pvm_from_observable(&Observable::along(m)?)?);
    let joint = premeasure_state(&rho, &setup)?;
    negative_eigenvalue_sum(&joint, setup.system_dim(), setup.apparatus_dim())
}

/// Spherical-coordinate grid in lexicographic (n index, θ index, φ index)
/// order: n runs over `n_steps` equal steps spanning [0, 1], θ over
/// `theta_steps` steps spanning [0, π], and φ over the given values.
/// Both endpoints are hit exactly.
pub fn bloch_grid(
    n_steps: usize,
    theta_steps: usize,
    phi_values: &[f64],
) -> Result<Vec<SphericalBloch>> {
    if n_steps < 2 || theta_steps < 2 {
        return Err(Error::OutOfRange(format!(
            "grid needs at least 2 steps per axis, got n_steps = {n_steps}, theta_steps = {theta_steps}"
        )));
    }
    if phi_values.is_empty() {
        return Err(Error::OutOfRange("empty phi grid".into()));
    }
    let mut grid = Vec::with_capacity(n_steps * theta_steps * phi_values.len());
    for i in 0..n_steps {
        let n = i as f64 / (n_steps - 1) as f64;
        for j in 0..theta_steps {
            // Land on π exactly rather than park a rounding error past
            // the domain edge.
            let theta = if j == theta_steps - 1 {
                std::f64::consts::PI
            } else {
                j as f64 * std::f64::consts::PI / (theta_steps - 1) as f64
            };
            for &phi in phi_values {
                grid.push(SphericalBloch::new(n, theta, phi)?);
            }
        }
    }
    Ok(grid)
}

/// One grid point of the central-relation scan: the spherical
/// coordinates plus the closed-form scalars and the numeric negativity
/// they are checked against.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QubitScanPoint {
    pub n: f64,
    pub theta: f64,
    pub phi: f64,
    pub skew: f64,
    pub mixedness: f64,
    pub negativity_closed: f64,
    pub negativity_numeric: f64,
}

impl QubitScanPoint {
    /// Absolute closed-vs-numeric negativity gap at this point.
    pub fn residual(&self) -> f64 {
        (self.negativity_closed - self.negativity_numeric).abs()
    }
}

/// Evaluates one scan point. The closed-form negativity is fed the
/// closed-form skew and mixedness (not their numeric counterparts): the
/// relation's √ℐ is infinitely steep at ℐ = 0, so near θ = 0 even
/// 1e-11 of eigensolver noise on the skew input would be amplified past
/// any reasonable gate. Closed-vs-numeric agreement of the inputs is a
/// separate, separately-tested statement.
pub fn scan_point(s: &SphericalBloch) -> Result<QubitScanPoint> {
    let skew = skew_closed_form_spherical(s);
    let mixedness = mixedness_closed_form(s.n)?;
    let negativity_closed = negativity_closed_form(skew, mixedness, s.n)?;
    let negativity_numeric = negativity_numeric_for_direction(
        &spherical_to_cartesian(s),
        [0.0, 0.0, 1.0],
    )?;
    Ok(QubitScanPoint {
        n: s.n,
        theta: s.theta,
        phi: s.phi,
        skew,
        mixedness,
        negativity_closed,
        negativity_numeric,
    })
}
