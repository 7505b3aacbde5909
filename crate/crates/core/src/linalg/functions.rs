//! Spectral matrix functions and operator brackets.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::tolerances;

/// Principal square root of a positive semidefinite Hermitian matrix,
/// computed spectrally as V sqrt(Λ) V†.
///
/// Eigenvalues at or below SQRT_ZERO_FLOOR are treated as exact zeros
/// before the root is taken. The square root is not Lipschitz at zero,
/// so without the floor the eigensolver's O(1e-13) noise on a genuinely
/// zero eigenvalue (any rank-deficient input, e.g. a pure state) would
/// surface as O(3e-7) entries in the result. Eigenvalues below
/// -PSD_CLAMP mean the input was never PSD and are rejected.
pub fn matrix_sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(m)?;
    let min = eig.eigenvalues.first().copied().unwrap_or(0.0);
    if min < -tolerances::PSD_CLAMP {
        return Err(Error::NotPositiveSemidefinite { min_eigenvalue: min });
    }
    Ok(eig.apply_spectral(|lambda| {
        if lambda <= tolerances::SQRT_ZERO_FLOOR {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(lambda.sqrt(), 0.0)
        }
    }))
}

/// Unitary exp(-i t H) for Hermitian H, computed spectrally.
pub fn matrix_exp_antihermitian(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(h)?;
    Ok(eig.apply_spectral(|lambda| Complex64::from_polar(1.0, -t * lambda)))
}

/// Trace norm ||M||_1 = sum of |eigenvalue| for Hermitian M.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    let eig = hermitian_eig(m)?;
    Ok(eig.eigenvalues.iter().map(|lambda| lambda.abs()).sum())
}

/// Commutator [A, B] = AB - BA.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    require_same_square(a, b)?;
    Ok(&a.matmul(b) - &b.matmul(a))
}

/// Anticommutator {A, B} = AB + BA.
pub fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    require_same_square(a, b)?;
    Ok(&a.matmul(b) + &b.matmul(a))
}

fn require_same_square(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<()> {
    if !a.is_square() || !b.is_square() || a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operands must be square and equal-sized, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::test_support::assert_close;
    use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()
    }

    fn sigma_y() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]])
            .unwrap()
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::diagonal(&[1.0, -1.0])
    }

    #[test]
    fn sqrt_of_diagonal() {
        let m = ComplexMatrix::diagonal(&[4.0, 9.0]);
        let s = matrix_sqrt_psd(&m).unwrap();
        assert!(s.max_abs_diff(&ComplexMatrix::diagonal(&[2.0, 3.0])) <= 1e-14);
    }

    #[test]
    fn sqrt_of_completely_mixed_qubit() {
        let m = ComplexMatrix::diagonal(&[0.5, 0.5]);
        let s = matrix_sqrt_psd(&m).unwrap();
        let expected = ComplexMatrix::diagonal(&[1.0 / SQRT_2, 1.0 / SQRT_2]);
        assert!(s.max_abs_diff(&expected) <= 1e-14);
    }

    #[test]
    fn sqrt_of_bloch_z_state() {
        // rho = (1 + 0.5 sigma_z)/2 has spectrum (1 +- 0.5)/2 = {0.75, 0.25}.
        let rho = ComplexMatrix::diagonal(&[0.75, 0.25]);
        let s = matrix_sqrt_psd(&rho).unwrap();
        let expected = ComplexMatrix::diagonal(&[0.75f64.sqrt(), 0.25f64.sqrt()]);
        assert!(s.max_abs_diff(&expected) <= 1e-14);
        // Round trip.
        assert!(s.matmul(&s).max_abs_diff(&rho) <= 1e-9);
    }

    #[test]
    fn sqrt_rejects_negative_spectrum() {
        let m = ComplexMatrix::diagonal(&[1.0, -0.1]);
        assert!(matches!(
            matrix_sqrt_psd(&m),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn sqrt_clamps_roundoff_negatives() {
        let m = ComplexMatrix::diagonal(&[1.0, -1e-12]);
        let s = matrix_sqrt_psd(&m).unwrap();
        assert_close(s[(1, 1)].re, 0.0, 1e-15);
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let h = ComplexMatrix::zeros(3, 3);
        let u = matrix_exp_antihermitian(&h, 1.7).unwrap();
        assert!(u.max_abs_diff(&ComplexMatrix::identity(3)) <= 1e-14);
    }

    #[test]
    fn exp_of_sigma_z_at_pi() {
        let u = matrix_exp_antihermitian(&sigma_z(), PI).unwrap();
        let minus_id = ComplexMatrix::identity(2).scale_re(-1.0);
        assert!(u.max_abs_diff(&minus_id) <= 1e-14);
    }

    #[test]
    fn exp_of_sigma_x_at_half_pi() {
        // exp(-i (pi/2) sigma_x) = -i sigma_x.
        let u = matrix_exp_antihermitian(&sigma_x(), FRAC_PI_2).unwrap();
        let expected = sigma_x().scale(c(0.0, -1.0));
        assert!(u.max_abs_diff(&expected) <= 1e-13);
    }

    #[test]
    fn exp_output_is_unitary() {
        let h = ComplexMatrix::from_rows(&[
            vec![c(0.3, 0.0), c(1.0, -2.0)],
            vec![c(1.0, 2.0), c(-0.7, 0.0)],
        ])
        .unwrap();
        let u = matrix_exp_antihermitian(&h, 2.31).unwrap();
        let gram = &u.adjoint() * &u;
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(2)) <= 1e-10);
    }

    #[test]
    fn trace_norm_examples() {
        assert_close(trace_norm(&ComplexMatrix::identity(2)).unwrap(), 2.0, 1e-14);
        assert_close(
            trace_norm(&ComplexMatrix::diagonal(&[1.0, -3.0])).unwrap(),
            4.0,
            1e-14,
        );
    }

    #[test]
    fn pauli_brackets() {
        let zero = ComplexMatrix::zeros(2, 2);
        assert!(commutator(&sigma_x(), &sigma_x()).unwrap().max_abs_diff(&zero) <= 1e-15);
        // [sigma_x, sigma_y] = 2i sigma_z.
        let expected = sigma_z().scale(c(0.0, 2.0));
        assert!(commutator(&sigma_x(), &sigma_y()).unwrap().max_abs_diff(&expected) <= 1e-15);
        // {sigma_x, sigma_y} = 0.
        assert!(anticommutator(&sigma_x(), &sigma_y()).unwrap().max_abs_diff(&zero) <= 1e-15);
    }

    #[test]
    fn bracket_dimension_mismatch() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(3);
        assert!(matches!(commutator(&a, &b), Err(Error::DimensionMismatch(_))));
        assert!(matches!(anticommutator(&a, &b), Err(Error::DimensionMismatch(_))));
    }
}
