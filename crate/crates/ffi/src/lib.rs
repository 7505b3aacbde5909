//! C ABI over the premeasure library: opaque handles for states and
//! observables, plain status codes for every fallible call, scalars and
//! interleaved complex buffers for data exchange.
//!
//! Conventions, uniform across the surface:
//! - every function returns a [`PmStatus`]; results leave through `out`
//!   pointers, written only on `PM_STATUS_OK`;
//! - any null required pointer yields `PM_STATUS_NULL_POINTER`;
//! - handles come from `pm_*_new`-style constructors and must be
//!   released with the matching `pm_*_free` exactly once; `free` on
//!   null is a no-op;
//! - complex matrices cross the boundary as row-major `double` buffers
//!   with interleaved re/im parts, length `2 * dim * dim`;
//! - panics cannot cross the boundary: anything unexpected is caught
//!   and reported as `PM_STATUS_INTERNAL`.

use premeasure::entangle::{negative_eigenvalue_sum, negativity};
use premeasure::linalg::{Complex64, ComplexMatrix};
use premeasure::measures::{mixedness, purity, skew_information, variance};
use premeasure::premeasure::{premeasure_state, PremeasurementSetup};
use premeasure::qubit_analytic as qa;
use premeasure::states::{
    density_from_bloch, pvm_from_observable, BlochVector, DensityMatrix, Observable,
    SphericalBloch,
};
use premeasure::Error;
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status code of every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmStatus {
    /// Success; `out` parameters hold values.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was out of range, mis-sized, or otherwise invalid.
    InvalidArgument = 2,
    /// A matrix argument was not Hermitian within tolerance.
    NotHermitian = 3,
    /// A matrix argument was not positive semidefinite within tolerance.
    NotPositive = 4,
    /// The eigensolver failed to converge (pathological input).
    NoConvergence = 5,
    /// Scalar inputs contradict each other (impossible state).
    Inconsistent = 6,
    /// Internal invariant violation; report as a bug.
    Internal = 7,
}

/// Opaque handle to a validated density matrix.
pub struct PmDensityMatrix(DensityMatrix);

/// Opaque handle to a Hermitian observable.
pub struct PmObservable(Observable);

/// One evaluated point of the qubit scan: coordinates, closed-form
/// scalars, and the numeric negativity they are checked against.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct PmScanPoint {
    pub n: f64,
    pub theta: f64,
    pub phi: f64,
    pub skew: f64,
    pub mixedness: f64,
    pub negativity_closed: f64,
    pub negativity_numeric: f64,
}

fn status_of(e: &Error) -> PmStatus {
    match e {
        Error::NotHermitian { .. } => PmStatus::NotHermitian,
        Error::NotPositiveSemidefinite { .. } => PmStatus::NotPositive,
        Error::NoConvergence { .. } => PmStatus::NoConvergence,
        Error::InconsistentInputs(_) => PmStatus::Inconsistent,
        Error::InternalConsistency(_) | Error::Io(_) => PmStatus::Internal,
        _ => PmStatus::InvalidArgument,
    }
}

/// Runs the body with a panic guard so unwinding never crosses the ABI.
fn guarded(body: impl FnOnce() -> PmStatus) -> PmStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(PmStatus::Internal)
}

/// Builds a matrix from an interleaved re/im row-major buffer.
///
/// # Safety
/// `entries` must point to `2 * dim * dim` readable doubles.
unsafe fn matrix_from_raw(dim: usize, entries: *const f64) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, dim, |i, j| {
        let k = 2 * (i * dim + j);
        Complex64::new(*entries.add(k), *entries.add(k + 1))
    })
}

unsafe fn write_out<T>(out: *mut T, value: T) -> PmStatus {
    if out.is_null() {
        return PmStatus::NullPointer;
    }
    out.write(value);
    PmStatus::Ok
}

/// Creates the qubit state ½(𝟙 + n·σ) for Bloch vector (nx, ny, nz).
///
/// # Safety
/// `out` must be a valid pointer; the returned handle must be released
/// with `pm_density_free`.
#[no_mangle]
pub unsafe extern "C" fn pm_density_from_bloch(
    nx: f64,
    ny: f64,
    nz: f64,
    out: *mut *mut PmDensityMatrix,
) -> PmStatus {
    guarded(|| {
        if out.is_null() {
            return PmStatus::NullPointer;
        }
        match BlochVector::new(nx, ny, nz).and_then(|b| density_from_bloch(&b)) {
            Ok(rho) => write_out(out, Box::into_raw(Box::new(PmDensityMatrix(rho)))),
            Err(e) => status_of(&e),
        }
    })
}

/// Creates a density matrix from a `dim`×`dim` interleaved buffer,
/// validating Hermiticity, unit trace, and positive semidefiniteness.
///
/// # Safety
/// `entries` must point to `2 * dim * dim` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pm_density_new(
    dim: usize,
    entries: *const f64,
    out: *mut *mut PmDensityMatrix,
) -> PmStatus {
    guarded(|| {
        if entries.is_null() || out.is_null() {
            return PmStatus::NullPointer;
        }
        if dim == 0 {
            return PmStatus::InvalidArgument;
        }
        match DensityMatrix::from_matrix(matrix_from_raw(dim, entries)) {
            Ok(rho) => write_out(out, Box::into_raw(Box::new(PmDensityMatrix(rho)))),
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a density-matrix handle. Null is a no-op.
///
/// # Safety
/// `rho` must be a handle from this library, released at most once.
#[no_mangle]
pub unsafe extern "C" fn pm_density_free(rho: *mut PmDensityMatrix) {
    if !rho.is_null() {
        drop(Box::from_raw(rho));
    }
}

/// Reads the total Hilbert-space dimension of a state.
///
/// # Safety
/// `rho` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pm_density_dim(
    rho: *const PmDensityMatrix,
    out: *mut usize,
) -> PmStatus {
    guarded(|| {
        if rho.is_null() {
            return PmStatus::NullPointer;
        }
        write_out(out, (*rho).0.dim())
    })
}

/// Copies the state's entries into `buffer` as interleaved re/im pairs,
/// row-major; `len` is the buffer capacity in doubles and must be at
/// least `2 * dim * dim`.
///
/// # Safety
/// `rho` must be valid; `buffer` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn pm_density_entries(
    rho: *const PmDensityMatrix,
    buffer: *mut f64,
    len: usize,
) -> PmStatus {
    guarded(|| {
        if rho.is_null() || buffer.is_null() {
            return PmStatus::NullPointer;
        }
        let m = (*rho).0.matrix();
        let needed = 2 * m.rows() * m.cols();
        if len < needed {
            return PmStatus::InvalidArgument;
        }
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let k = 2 * (i * m.cols() + j);
                buffer.add(k).write(m[(i, j)].re);
                buffer.add(k + 1).write(m[(i, j)].im);
            }
        }
        PmStatus::Ok
    })
}

/// Creates a Hermitian observable from a `dim`×`dim` interleaved buffer.
///
/// # Safety
/// `entries` must point to `2 * dim * dim` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pm_observable_new(
    dim: usize,
    entries: *const f64,
    out: *mut *mut PmObservable,
) -> PmStatus {
    guarded(|| {
        if entries.is_null() || out.is_null() {
            return PmStatus::NullPointer;
        }
        if dim == 0 {
            return PmStatus::InvalidArgument;
        }
        match Observable::new(matrix_from_raw(dim, entries)) {
            Ok(x) => write_out(out, Box::into_raw(Box::new(PmObservable(x)))),
            Err(e) => status_of(&e),
        }
    })
}

/// Creates the qubit observable m·σ for a unit direction (mx, my, mz).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pm_observable_along(
    mx: f64,
    my: f64,
    mz: f64,
    out: *mut *mut PmObservable,
) -> PmStatus {
    guarded(|| {
        if out.is_null() {
            return PmStatus::NullPointer;
        }
        match Observable::along([mx, my, mz]) {
            Ok(x) => write_out(out, Box::into_raw(Box::new(PmObservable(x)))),
            Err(e) => status_of(&e),
        }
    })
}

/// Releases an observable handle. Null is a no-op.
///
/// # Safety
/// `x` must be a handle from this library, released at most once.
#[no_mangle]
pub unsafe extern "C" fn pm_observable_free(x: *mut PmObservable) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

macro_rules! scalar_of_state {
    ($(#[$doc:meta])* $name:ident, $body:expr) => {
        $(#[$doc])*
        ///
        /// # Safety
        /// `rho` and `out` must be valid pointers.
        #[no_mangle]
        pub unsafe extern "C" fn $name(
            rho: *const PmDensityMatrix,
            out: *mut f64,
        ) -> PmStatus {
            guarded(|| {
                if rho.is_null() {
                    return PmStatus::NullPointer;
                }
                #[allow(clippy::redundant_closure_call)]
                write_out(out, ($body)(&(*rho).0))
            })
        }
    };
}

scalar_of_state!(
    /// Mixedness ℳ(ρ) = Trρ − Trρ².
    pm_mixedness,
    |rho: &DensityMatrix| mixedness(rho)
);

scalar_of_state!(
    /// Purity Trρ².
    pm_purity,
    |rho: &DensityMatrix| purity(rho)
);

/// Wigner–Yanase skew information ℐ(ρ, X) = −½Tr[√ρ, X]².
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pm_skew_information(
    rho: *const PmDensityMatrix,
    x: *const PmObservable,
    out: *mut f64,
) -> PmStatus {
    guarded(|| {
        if rho.is_null() || x.is_null() {
            return PmStatus::NullPointer;
        }
        match skew_information(&(*rho).0, &(*x).0) {
            Ok(v) => write_out(out, v),
            Err(e) => status_of(&e),
        }
    })
}

/// Variance Tr(ρX²) − (TrρX)².
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pm_variance(
    rho: *const PmDensityMatrix,
    x: *const PmObservable,
    out: *mut f64,
) -> PmStatus {
    guarded(|| {
        if rho.is_null() || x.is_null() {
            return PmStatus::NullPointer;
        }
        match variance(&(*rho).0, &(*x).0) {
            Ok(v) => write_out(out, v),
            Err(e) => status_of(&e),
        }
    })
}

/// Premeasures `rho` with the projective measurement of `x`: couples it
/// to a pointer that starts in its first basis state and applies the
/// controlled-shift isometry. On success `out_joint` receives the joint
/// system-apparatus state; `out_system_dim` and `out_apparatus_dim`
/// (each optional, may be null) receive the bipartition.
///
/// # Safety
/// `rho`, `x`, and `out_joint` must be valid pointers; the joint handle
/// must be released with `pm_density_free`.
#[no_mangle]
pub unsafe extern "C" fn pm_premeasure(
    rho: *const PmDensityMatrix,
    x: *const PmObservable,
    out_joint: *mut *mut PmDensityMatrix,
    out_system_dim: *mut usize,
    out_apparatus_dim: *mut usize,
) -> PmStatus {
    guarded(|| {
        if rho.is_null() || x.is_null() || out_joint.is_null() {
            return PmStatus::NullPointer;
        }
        let setup = match pvm_from_observable(&(*x).0) {
            Ok(pvm) => PremeasurementSetup::new(pvm),
            Err(e) => return status_of(&e),
        };
        match premeasure_state(&(*rho).0, &setup) {
            Ok(joint) => {
                if !out_system_dim.is_null() {
                    out_system_dim.write(setup.system_dim());
                }
                if !out_apparatus_dim.is_null() {
                    out_apparatus_dim.write(setup.apparatus_dim());
                }
                write_out(out_joint, Box::into_raw(Box::new(PmDensityMatrix(joint))))
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Entanglement negativity (‖ρ^{T_A}‖₁ − 1)/2 for the bipartition
/// `dim_a` × `dim_b`.
///
/// # Safety
/// `rho` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pm_negativity(
    rho: *const PmDensityMatrix,
    dim_a: usize,
    dim_b: usize,
    out: *mut f64,
) -> PmStatus {
    guarded(|| {
        if rho.is_null() {
            return PmStatus::NullPointer;
        }
        match negativity(&(*rho).0, dim_a, dim_b) {
            Ok(v) => write_out(out, v),
            Err(e) => status_of(&e),
        }
    })
}

/// Negativity as the absolute sum of negative partial-transpose
/// eigenvalues; agrees with `pm_negativity` to reporting precision.
///
/// # Safety
/// `rho` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pm_negative_eigenvalue_sum(
    rho: *const PmDensityMatrix,
    dim_a: usize,
    dim_b: usize,
    out: *mut f64,
) -> PmStatus {
    guarded(|| {
        if rho.is_null() {
            return PmStatus::NullPointer;
        }
        match negative_eigenvalue_sum(&(*rho).0, dim_a, dim_b) {
            Ok(v) => write_out(out, v),
            Err(e) => status_of(&e),
        }
    })
}

/// Closed-form qubit skew information for σ_z in Cartesian Bloch
/// coordinates: (nx² + ny²)/(1 + √(1 − |n|²)).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pm_skew_closed_form(
    nx: f64,
    ny: f64,
    nz: f64,
    out: *mut f64,
) -> PmStatus {
    guarded(|| match BlochVector::new(nx, ny, nz)
        .and_then(|b| qa::skew_closed_form_cartesian(&b))
    {
        Ok(v) => write_out(out, v),
        Err(e) => status_of(&e),
    })
}

/// Closed-form qubit mixedness ½(1 − n²) for Bloch length n in [0, 1].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pm_mixedness_closed_form(n: f64, out: *mut f64) -> PmStatus {
    guarded(|| match qa::mixedness_closed_form(n) {
        Ok(v) => write_out(out, v),
        Err(e) => status_of(&e),
    })
}

/// The central relation: negativity of the σ_z premeasurement from the
/// input's skew information, mixedness, and Bloch length,
/// 𝒩 = n·√(ℐ/(1 − √(2ℳ)))/2.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pm_negativity_closed_form(
    skew: f64,
    mixedness: f64,
    n: f64,
    out: *mut f64,
) -> PmStatus {
    guarded(|| match qa::negativity_closed_form(skew, mixedness, n) {
        Ok(v) => write_out(out, v),
        Err(e) => status_of(&e),
    })
}

/// Premeasurement negativity for measuring along the unit direction
/// (mx, my, mz): ½√(|n|² − (n·m)²).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pm_negativity_geometric(
    nx: f64,
    ny: f64,
    nz: f64,
    mx: f64,
    my: f64,
    mz: f64,
    out: *mut f64,
) -> PmStatus {
    guarded(|| match BlochVector::new(nx, ny, nz)
        .and_then(|b| qa::negativity_geometric(&b, [mx, my, mz]))
    {
        Ok(v) => write_out(out, v),
        Err(e) => status_of(&e),
    })
}

/// Evaluates one scan point at spherical coordinates (n, theta, phi):
/// closed-form skew and mixedness, closed-form negativity, and the
/// fully numeric negativity for comparison.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pm_scan_point(
    n: f64,
    theta: f64,
    phi: f64,
    out: *mut PmScanPoint,
) -> PmStatus {
    guarded(|| match SphericalBloch::new(n, theta, phi).and_then(|s| qa::scan_point(&s)) {
        Ok(p) => write_out(
            out,
            PmScanPoint {
                n: p.n,
                theta: p.theta,
                phi: p.phi,
                skew: p.skew,
                mixedness: p.mixedness,
                negativity_closed: p.negativity_closed,
                negativity_numeric: p.negativity_numeric,
            },
        ),
        Err(e) => status_of(&e),
    })
}
