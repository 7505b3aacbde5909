#ifndef PREMEASURE_H
#define PREMEASURE_H

/* Generated by cbindgen from premeasure-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every FFI call.
 */
typedef enum {
  /**
   * Success; `out` parameters hold values.
   */
  PM_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  PM_STATUS_NULL_POINTER = 1,
  /**
   * An argument was out of range, mis-sized, or otherwise invalid.
   */
  PM_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A matrix argument was not Hermitian within tolerance.
   */
  PM_STATUS_NOT_HERMITIAN = 3,
  /**
   * A matrix argument was not positive semidefinite within tolerance.
   */
  PM_STATUS_NOT_POSITIVE = 4,
  /**
   * The eigensolver failed to converge (pathological input).
   */
  PM_STATUS_NO_CONVERGENCE = 5,
  /**
   * Scalar inputs contradict each other (impossible state).
   */
  PM_STATUS_INCONSISTENT = 6,
  /**
   * Internal invariant violation; report as a bug.
   */
  PM_STATUS_INTERNAL = 7,
} PmStatus;

/**
 * Opaque handle to a validated density matrix.
 */
typedef struct PmDensityMatrix PmDensityMatrix;

/**
 * Opaque handle to a Hermitian observable.
 */
typedef struct PmObservable PmObservable;

/**
 * One evaluated point of the qubit scan: coordinates, closed-form
 * scalars, and the numeric negativity they are checked against.
 */
typedef struct {
  double n;
  double theta;
  double phi;
  double skew;
  double mixedness;
  double negativity_closed;
  double negativity_numeric;
} PmScanPoint;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates the qubit state ½(𝟙 + n·σ) for Bloch vector (nx, ny, nz).
 *
 * # Safety
 * `out` must be a valid pointer; the returned handle must be released
 * with `pm_density_free`.
 */
PmStatus pm_density_from_bloch(double nx, double ny, double nz, PmDensityMatrix **out);

/**
 * Creates a density matrix from a `dim`×`dim` interleaved buffer,
 * validating Hermiticity, unit trace, and positive semidefiniteness.
 *
 * # Safety
 * `entries` must point to `2 * dim * dim` doubles; `out` must be valid.
 */
PmStatus pm_density_new(size_t dim, const double *entries, PmDensityMatrix **out);

/**
 * Releases a density-matrix handle. Null is a no-op.
 *
 * # Safety
 * `rho` must be a handle from this library, released at most once.
 */
void pm_density_free(PmDensityMatrix *rho);

/**
 * Reads the total Hilbert-space dimension of a state.
 *
 * # Safety
 * `rho` and `out` must be valid pointers.
 */
PmStatus pm_density_dim(const PmDensityMatrix *rho, size_t *out);

/**
 * Copies the state's entries into `buffer` as interleaved re/im pairs,
 * row-major; `len` is the buffer capacity in doubles and must be at
 * least `2 * dim * dim`.
 *
 * # Safety
 * `rho` must be valid; `buffer` must point to `len` writable doubles.
 */
PmStatus pm_density_entries(const PmDensityMatrix *rho, double *buffer, size_t len);

/**
 * Creates a Hermitian observable from a `dim`×`dim` interleaved buffer.
 *
 * # Safety
 * `entries` must point to `2 * dim * dim` doubles; `out` must be valid.
 */
PmStatus pm_observable_new(size_t dim, const double *entries, PmObservable **out);

/**
 * Creates the qubit observable m·σ for a unit direction (mx, my, mz).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
PmStatus pm_observable_along(double mx, double my, double mz, PmObservable **out);

/**
 * Releases an observable handle. Null is a no-op.
 *
 * # Safety
 * `x` must be a handle from this library, released at most once.
 */
void pm_observable_free(PmObservable *x);

/**
 * Wigner–Yanase skew information ℐ(ρ, X) = −½Tr[√ρ, X]².
 *
 * # Safety
 * All pointers must be valid.
 */
PmStatus pm_skew_information(const PmDensityMatrix *rho, const PmObservable *x, double *out);

/**
 * Variance Tr(ρX²) − (TrρX)².
 *
 * # Safety
 * All pointers must be valid.
 */
PmStatus pm_variance(const PmDensityMatrix *rho, const PmObservable *x, double *out);

/**
 * Premeasures `rho` with the projective measurement of `x`: couples it
 * to a pointer that starts in its first basis state and applies the
 * controlled-shift isometry. On success `out_joint` receives the joint
 * system-apparatus state; `out_system_dim` and `out_apparatus_dim`
 * (each optional, may be null) receive the bipartition.
 *
 * # Safety
 * `rho`, `x`, and `out_joint` must be valid pointers; the joint handle
 * must be released with `pm_density_free`.
 */
PmStatus pm_premeasure(const PmDensityMatrix *rho,
                       const PmObservable *x,
                       PmDensityMatrix **out_joint,
                       size_t *out_system_dim,
                       size_t *out_apparatus_dim);

/**
 * Entanglement negativity (‖ρ^{T_A}‖₁ − 1)/2 for the bipartition
 * `dim_a` × `dim_b`.
 *
 * # Safety
 * `rho` and `out` must be valid pointers.
 */
PmStatus pm_negativity(const PmDensityMatrix *rho, size_t dim_a, size_t dim_b, double *out);

/**
 * Negativity as the absolute sum of negative partial-transpose
 * eigenvalues; agrees with `pm_negativity` to reporting precision.
 *
 * # Safety
 * `rho` and `out` must be valid pointers.
 */
PmStatus pm_negative_eigenvalue_sum(const PmDensityMatrix *rho,
                                    size_t dim_a,
                                    size_t dim_b,
                                    double *out);

/**
 * Closed-form qubit skew information for σ_z in Cartesian Bloch
 * coordinates: (nx² + ny²)/(1 + √(1 − |n|²)).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
PmStatus pm_skew_closed_form(double nx, double ny, double nz, double *out);

/**
 * Closed-form qubit mixedness ½(1 − n²) for Bloch length n in [0, 1].
 *
 * # Safety
 * `out` must be a valid pointer.
 */
PmStatus pm_mixedness_closed_form(double n, double *out);

/**
 * The central relation: negativity of the σ_z premeasurement from the
 * input's skew information, mixedness, and Bloch length,
 * 𝒩 = n·√(ℐ/(1 − √(2ℳ)))/2.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
PmStatus pm_negativity_closed_form(double skew, double mixedness, double n, double *out);

/**
 * Premeasurement negativity for measuring along the unit direction
 * (mx, my, mz): ½√(|n|² − (n·m)²).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
PmStatus pm_negativity_geometric(double nx,
                                 double ny,
                                 double nz,
                                 double mx,
                                 double my,
                                 double mz,
                                 double *out);

/**
 * Evaluates one scan point at spherical coordinates (n, theta, phi):
 * closed-form skew and mixedness, closed-form negativity, and the
 * fully numeric negativity for comparison.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
PmStatus pm_scan_point(double n, double theta, double phi, PmScanPoint *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PREMEASURE_H */
