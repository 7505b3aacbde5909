//! Centralized numeric settings.
//!
//! Every tolerance used by the library is defined here, once, with its
//! rationale. Modules refer to these constants instead of scattering
//! magic numbers through the code.

/// Max-entry deviation allowed between M and M† before an input is
/// rejected as non-Hermitian. States and observables are constructed from
/// exact arithmetic plus at most a handful of roundings, so 1e-12 leaves
/// three orders of magnitude of headroom over f64 epsilon.
pub const HERMITICITY: f64 = 1e-12;

/// Eigenvalues of a nominally PSD matrix in [-PSD_CLAMP, 0) are treated as
/// roundoff and clamped to zero; anything more negative is a genuine
/// violation and is reported as an error.
pub const PSD_CLAMP: f64 = 1e-10;

/// In the PSD matrix square root, eigenvalues at or below this floor are
/// rooted as exact zeros. Rank-deficient inputs (pure states, projector
/// sums) carry eigenvalues that are zero in exact arithmetic but come out
/// of the solver as O(1e-13) noise; sqrt would amplify that noise to
/// O(3e-7) because its derivative blows up at zero. The floor is
/// absolute, sized for the unit-scale operators this crate works with
/// (density matrices and Pauli-sized observables), and sits well above
/// solver noise yet below any genuine eigenvalue these inputs produce.
pub const SQRT_ZERO_FLOOR: f64 = 1e-12;

/// Closed-form companion to [`SQRT_ZERO_FLOOR`]: Bloch vectors with
/// 1 − |n|² at or below this are treated as exactly pure by the
/// closed-form skew expressions. The skew's derivative with respect to
/// |n|² is unbounded at the sphere, so a 1-ulp rounding in the
/// components legitimately moves the exact value by ~1e-8 there; the
/// numeric pipeline resolves the same ambiguity by flooring the small
/// eigenvalue λ₋ = (1 − |n|)/2 at SQRT_ZERO_FLOOR, and
/// 1 − |n|² = (1 − |n|)(1 + |n|) ≤ 2·SQRT_ZERO_FLOOR·2 maps that
/// eigenvalue floor onto this radial one. With both sides regularizing
/// identically, closed and numeric skew agree at full precision on and
/// near the sphere instead of drifting apart at ~1e-8.
pub const PURE_RADIAL_FLOOR: f64 = 4.0 * SQRT_ZERO_FLOOR;

/// Jacobi sweep convergence: stop once the off-diagonal Frobenius norm
/// drops below this factor times the Frobenius norm of the input.
pub const EIGEN_CONVERGENCE_REL: f64 = 1e-13;

/// Sweep budget for the Jacobi eigensolver. Convergence is quadratic;
/// dimensions used here (<= 16) need fewer than ten sweeps.
pub const EIGEN_MAX_SWEEPS: usize = 100;

/// Eigenvalues within this grouping distance of each other are treated as
/// one degenerate outcome when an observable is split into projectors.
pub const EIGENVALUE_GROUPING: f64 = 1e-9;

/// Eigenvalues of a partial transpose with magnitude at or below this
/// threshold are treated as zero when negative parts are summed, so that
/// eigensolver noise is not counted as entanglement.
pub const EIGENVALUE_ZERO: f64 = 1e-11;

/// Slack permitted on |n|^2 <= 1 for Bloch vectors, absorbing roundoff in
/// coordinate transforms.
pub const BLOCH_BALL_SLACK: f64 = 1e-12;

/// Scalar measures that are nonnegative by theory (skew information,
/// negativity) clamp values in [-SCALAR_CLAMP, 0) to zero; more negative
/// values raise an internal-consistency error instead of being hidden.
pub const SCALAR_CLAMP: f64 = 1e-10;

/// Below this Bloch length the closed-form negativity prefactor
/// (1 - sqrt(2M))^(-1/2) is evaluated as its n -> 0 limit, which is zero.
/// The discarded entanglement is at most N_FLOOR / 2.
pub const BLOCH_LENGTH_FLOOR: f64 = 1e-8;

/// Projector axioms (idempotence, orthogonality, completeness) are checked
/// at this max-entry tolerance.
pub const PVM_AXIOMS: f64 = 1e-10;
