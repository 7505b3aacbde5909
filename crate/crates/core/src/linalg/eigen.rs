//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation annihilates one off-diagonal pair (p, q) with a unitary
//! 2x2 transformation: the phase of M[p][q] is absorbed into the rotation,
//! which reduces the pivot block to the real symmetric case, and the
//! classic Jacobi angle formulas do the rest. Sweeps over all pairs repeat
//! until the off-diagonal Frobenius norm falls below
//! `EIGEN_CONVERGENCE_REL * ||M||_F`.
//!
//! The dimensions this crate works at (<= 16) make Jacobi an accurate,
//! dependency-free choice; convergence is quadratic once the matrix is
//! near diagonal.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::tolerances;

/// Result of a Hermitian eigendecomposition, M = V diag(eigenvalues) V†.
///
/// Eigenvalues are sorted ascending; column k of `eigenvectors` is the
/// eigenvector for `eigenvalues[k]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// Rebuilds V f(Λ) V† for a scalar function applied to the spectrum.
    pub fn apply_spectral(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let flambda = f(lambda);
            if flambda.re == 0.0 && flambda.im == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = v[(i, k)] * flambda;
                for j in 0..n {
                    out[(i, j)] += vik * v[(j, k)].conj();
                }
            }
        }
        out
    }

    /// Rebuilds the original matrix, V Λ V†.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply_spectral(|lambda| Complex64::new(lambda, 0.0))
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input must satisfy max |M - M†| <= `tolerances::HERMITICITY`;
/// the working copy is symmetrized so the iteration itself sees an exactly
/// Hermitian matrix.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<EigenDecomposition> {
    m.require_hermitian(tolerances::HERMITICITY)?;
    m.check_finite()?;
    let n = m.dim();

    // Exactly Hermitian working copy: a[i][j] = (m[i][j] + conj(m[j][i])) / 2.
    let mut a = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        a[(i, i)] = Complex64::new(m[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let z = (m[(i, j)] + m[(j, i)].conj()).scale(0.5);
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }
    let mut v = ComplexMatrix::identity(n);

    let norm = a.frobenius_norm();
    let threshold = tolerances::EIGEN_CONVERGENCE_REL * norm;

    let mut converged = n <= 1 || off_diagonal_norm(&a) <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < tolerances::EIGEN_MAX_SWEEPS {
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&a) <= threshold;
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps,
            residual: off_diagonal_norm(&a),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).expect("finite eigenvalues"));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);

    Ok(EigenDecomposition { eigenvalues, eigenvectors })
}

/// Frobenius norm of the strictly off-diagonal part.
fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            sum += 2.0 * a[(p, q)].norm_sqr();
        }
    }
    sum.sqrt()
}

/// One Jacobi rotation annihilating a[p][q] (p < q).
///
/// With beta = a[p][q] = |beta| e^{i phi}, the pivot transformation is
///
///   J[p][p] = c            J[p][q] = s e^{i phi}
///   J[q][p] = -s e^{-i phi}  J[q][q] = c
///
/// where (c, s) solve the real Jacobi problem for the symmetric block
/// [[a_pp, |beta|], [|beta|, a_qq]]. Updates a <- J† a J and v <- v J.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let beta = a[(p, q)];
    let abs = beta.norm();
    if abs == 0.0 {
        return;
    }
    let phase = beta.unscale(abs); // e^{i phi}

    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * abs);
    // Smaller-magnitude root of t^2 + 2 tau t - 1 = 0.
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (tau - (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = a.dim();
    let s_phase = phase.scale(s); // s e^{i phi}

    // Row update: a <- J† a.
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = apj.scale(c) - s_phase * aqj;
        a[(q, j)] = s_phase.conj() * apj + aqj.scale(c);
    }
    // Column update: a <- a J, and accumulate v <- v J.
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip.scale(c) - s_phase.conj() * aiq;
        a[(i, q)] = s_phase * aip + aiq.scale(c);

        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip.scale(c) - s_phase.conj() * viq;
        v[(i, q)] = s_phase * vip + viq.scale(c);
    }

    // The pivot pair is zero by construction; pin it and keep the diagonal real.
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::test_support::assert_close;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_input_sorted_ascending() {
        let m = ComplexMatrix::diagonal(&[3.0, 1.0]);
        let eig = hermitian_eig(&m).unwrap();
        assert_eq!(eig.eigenvalues, vec![1.0, 3.0]);
        // Eigenvectors are the permuted identity columns.
        assert_close(eig.eigenvectors[(1, 0)].re, 1.0, 1e-15);
        assert_close(eig.eigenvectors[(0, 1)].re, 1.0, 1e-15);
    }

    #[test]
    fn pauli_x_spectrum() {
        let sx = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let eig = hermitian_eig(&sx).unwrap();
        assert_close(eig.eigenvalues[0], -1.0, 1e-14);
        assert_close(eig.eigenvalues[1], 1.0, 1e-14);
    }

    #[test]
    fn pauli_y_spectrum_and_vectors() {
        let sy = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let eig = hermitian_eig(&sy).unwrap();
        assert_close(eig.eigenvalues[0], -1.0, 1e-14);
        assert_close(eig.eigenvalues[1], 1.0, 1e-14);
        let recon = eig.reconstruct();
        assert!(recon.max_abs_diff(&sy) <= 1e-14);
    }

    #[test]
    fn unitarity_of_eigenvector_matrix() {
        // Fixed 4x4 Hermitian matrix with non-trivial complex structure.
        let m = ComplexMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, 1.0), c(0.0, -2.0), c(0.5, 0.0)],
            vec![c(1.0, -1.0), c(-1.0, 0.0), c(3.0, 0.5), c(0.0, 1.0)],
            vec![c(0.0, 2.0), c(3.0, -0.5), c(0.0, 0.0), c(-1.0, 0.25)],
            vec![c(0.5, 0.0), c(0.0, -1.0), c(-1.0, -0.25), c(4.0, 0.0)],
        ])
        .unwrap();
        let eig = hermitian_eig(&m).unwrap();
        let v = &eig.eigenvectors;
        let gram = &v.adjoint() * v;
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(4)) <= 1e-12);
        assert!(eig.reconstruct().max_abs_diff(&m) <= 1e-11 * m.max_abs().max(1.0));
        // Ascending order.
        for w in eig.eigenvalues.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn one_by_one_matrix() {
        let m = ComplexMatrix::diagonal(&[-2.5]);
        let eig = hermitian_eig(&m).unwrap();
        assert_eq!(eig.eigenvalues, vec![-2.5]);
    }

    #[test]
    fn zero_matrix_converges_immediately() {
        let m = ComplexMatrix::zeros(3, 3);
        let eig = hermitian_eig(&m).unwrap();
        assert_eq!(eig.eigenvalues, vec![0.0, 0.0, 0.0]);
    }
}
