//! Scalar information measures: Wigner-Yanase skew information,
//! mixedness, purity, and observable variance.
//!
//! Skew information is implemented twice on purpose. The defining
//! commutator form ℐ(ρ,X) = −½Tr[√ρ,X]² and the expanded trace form
//! Tr(ρX²) − Tr(√ρX√ρX) are algebraically identical but numerically
//! independent enough that their agreement is a meaningful cross-check on
//! the square-root pipeline; the verification suites compare them on
//! random inputs.

use crate::error::{Error, Result};
use crate::linalg::{commutator, matrix_sqrt_psd};
use crate::states::{DensityMatrix, Observable};
use crate::tolerances;

/// Wigner-Yanase skew information ℐ(ρ,X) = −½Tr[√ρ,X]².
pub fn skew_information(rho: &DensityMatrix, x: &Observable) -> Result<f64> {
    require_same_dim(rho, x)?;
    let sqrt_rho = matrix_sqrt_psd(rho.matrix())?;
    let c = commutator(&sqrt_rho, x.matrix())?;
    let value = -0.5 * c.matmul(&c).trace().re;
    clamp_nonnegative(value, "skew information")
}

/// The expanded form ℐ(ρ,X) = Tr(ρX²) − Tr(√ρX√ρX), kept as an
/// independent computational path.
pub fn skew_information_rewritten(rho: &DensityMatrix, x: &Observable) -> Result<f64> {
    require_same_dim(rho, x)?;
    let sqrt_rho = matrix_sqrt_psd(rho.matrix())?;
    let x_sq = x.matrix().matmul(x.matrix());
    let first = rho.matrix().matmul(&x_sq).trace().re;
    let sxsx = sqrt_rho
        .matmul(x.matrix())
        .matmul(&sqrt_rho)
        .matmul(x.matrix());
    clamp_nonnegative(first - sxsx.trace().re, "skew information (rewritten)")
}

/// Mixedness ℳ(ρ) = Trρ − Trρ². Zero for pure states, 1 − 1/d for the
/// maximally mixed state.
pub fn mixedness(rho: &DensityMatrix) -> f64 {
    let tr = rho.matrix().trace().re;
    let tr_sq = rho.matrix().matmul(rho.matrix()).trace().re;
    // Pure states land at 0 up to roundoff; keep the output in range.
    (tr - tr_sq).max(0.0)
}

/// Purity Trρ², the complement of mixedness for trace-one states.
pub fn purity(rho: &DensityMatrix) -> f64 {
    rho.matrix().matmul(rho.matrix()).trace().re
}

/// Variance Tr(ρX²) − (TrρX)². Upper-bounds the skew information, with
/// equality on pure states.
pub fn variance(rho: &DensityMatrix, x: &Observable) -> Result<f64> {
    require_same_dim(rho, x)?;
    let x_sq = x.matrix().matmul(x.matrix());
    let second_moment = rho.matrix().matmul(&x_sq).trace().re;
    let mean = rho.matrix().matmul(x.matrix()).trace().re;
    clamp_nonnegative(second_moment - mean * mean, "variance")
}

/// Maps roundoff-negative values in [−1e-10, 0) to 0. Anything more
/// negative is a solver bug, not roundoff, and is reported instead of
/// hidden.
fn clamp_nonnegative(value: f64, what: &str) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -tolerances::SCALAR_CLAMP {
        Ok(0.0)
    } else {
        Err(Error::InternalConsistency(format!(
            "{what} evaluated to {value:.6e}, beyond the roundoff clamp window"
        )))
    }
}

fn require_same_dim(rho: &DensityMatrix, x: &Observable) -> Result<()> {
    if rho.dim() != x.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state has dimension {}, observable {}",
            rho.dim(),
            x.dim()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::test_support::assert_close;
    use crate::linalg::ComplexMatrix;
    use crate::rng::SplitMix64;
    use crate::states::{
        density_from_bloch, pauli_z, random_density_with, random_hermitian, BlochVector,
    };

    fn sigma_z() -> Observable {
        Observable::new(pauli_z()).unwrap()
    }

    fn qubit(n_x: f64, n_y: f64, n_z: f64) -> DensityMatrix {
        density_from_bloch(&BlochVector::new(n_x, n_y, n_z).unwrap()).unwrap()
    }

    #[test]
    fn skew_vanishes_when_state_commutes_with_observable() {
        assert_close(skew_information(&qubit(0.0, 0.0, 0.0), &sigma_z()).unwrap(), 0.0, 1e-14);
        assert_close(skew_information(&qubit(0.0, 0.0, 0.7), &sigma_z()).unwrap(), 0.0, 1e-13);
    }

    #[test]
    fn skew_of_plus_state_is_one() {
        assert_close(skew_information(&qubit(1.0, 0.0, 0.0), &sigma_z()).unwrap(), 1.0, 1e-10);
    }

    #[test]
    fn skew_of_tilted_mixed_state() {
        // n = (0.4, 0.3, 0): sqrt(rho) = a*1 + b*(n_hat . sigma) with
        // b = (sqrt(0.75) - sqrt(0.25))/2, and the commutator picks up the
        // unit transverse component, giving I = 4b^2 = 1 - sqrt(0.75).
        let expected = 0.1339745962155614;
        assert_close(
            skew_information(&qubit(0.4, 0.3, 0.0), &sigma_z()).unwrap(),
            expected,
            1e-10,
        );
        assert_close(
            skew_information_rewritten(&qubit(0.4, 0.3, 0.0), &sigma_z()).unwrap(),
            expected,
            1e-10,
        );
    }

    #[test]
    fn both_skew_forms_agree_on_random_inputs() {
        let mut rng = SplitMix64::new(314);
        for dim in 2..=5 {
            for rank in 1..=dim {
                let rho = random_density_with(&mut rng, dim, rank).unwrap();
                let x = Observable::new(random_hermitian(&mut rng, dim)).unwrap();
                let a = skew_information(&rho, &x).unwrap();
                let b = skew_information_rewritten(&rho, &x).unwrap();
                assert!((a - b).abs() <= 1e-10, "forms differ by {:.3e}", (a - b).abs());
            }
        }
    }

    #[test]
    fn mixedness_examples() {
        assert_close(mixedness(&qubit(1.0, 0.0, 0.0)), 0.0, 1e-14);
        assert_close(mixedness(&qubit(0.0, 0.0, 0.0)), 0.5, 1e-14);
        assert_close(mixedness(&qubit(0.0, 0.5, 0.0)), 0.375, 1e-14);
    }

    #[test]
    fn purity_examples_and_complementarity() {
        assert_close(purity(&qubit(0.0, 1.0, 0.0)), 1.0, 1e-14);
        assert_close(purity(&qubit(0.0, 0.0, 0.0)), 0.5, 1e-14);
        assert_close(purity(&qubit(0.3, 0.0, 0.4)), 0.625, 1e-14);

        let rho = qubit(0.2, -0.3, 0.1);
        assert_close(purity(&rho) + mixedness(&rho), 1.0, 1e-14);
    }

    #[test]
    fn variance_examples() {
        // Eigenstate of the observable.
        assert_close(variance(&qubit(0.0, 0.0, 1.0), &sigma_z()).unwrap(), 0.0, 1e-14);
        assert_close(variance(&qubit(1.0, 0.0, 0.0), &sigma_z()).unwrap(), 1.0, 1e-14);
        assert_close(variance(&qubit(0.0, 0.0, 0.0), &sigma_z()).unwrap(), 1.0, 1e-14);
    }

    #[test]
    fn skew_never_exceeds_variance() {
        let mut rng = SplitMix64::new(2025);
        for _ in 0..20 {
            let rho = random_density_with(&mut rng, 3, 2).unwrap();
            let x = Observable::new(random_hermitian(&mut rng, 3)).unwrap();
            let skew = skew_information(&rho, &x).unwrap();
            let var = variance(&rho, &x).unwrap();
            assert!(skew <= var + 1e-10, "skew {skew} > variance {var}");
        }
    }

    #[test]
    fn skew_equals_variance_on_pure_states() {
        let mut rng = SplitMix64::new(555);
        for dim in 2..=4 {
            let rho = random_density_with(&mut rng, dim, 1).unwrap();
            let x = Observable::new(random_hermitian(&mut rng, dim)).unwrap();
            let skew = skew_information(&rho, &x).unwrap();
            let var = variance(&rho, &x).unwrap();
            assert!((skew - var).abs() <= 1e-9, "gap {:.3e}", (skew - var).abs());
        }
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let rho = qubit(0.0, 0.0, 0.0);
        let x3 = Observable::new(ComplexMatrix::identity(3)).unwrap();
        assert!(skew_information(&rho, &x3).is_err());
        assert!(skew_information_rewritten(&rho, &x3).is_err());
        assert!(variance(&rho, &x3).is_err());
    }
}
