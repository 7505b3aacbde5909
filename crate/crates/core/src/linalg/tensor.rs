//! Tensor-product structure: Kronecker products, partial transpose,
//! partial trace.
//!
//! The index convention is row-major with the first factor as the slow
//! index: a joint basis ket |a>|b> of a dimA x dimB system sits at index
//! a * dimB + b. Every module in this crate inherits this convention.

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// Which tensor factor of a bipartite operator an operation acts on.
/// `A` is the first (slow-index) factor, `B` the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Kronecker product A ⊗ B.
///
/// Entry ((i*rowsB + k), (j*colsB + l)) = A[i,j] * B[k,l]. Rectangular
/// factors are allowed, which covers kets (n x 1) as well as operators.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ra, ca) = (a.rows(), a.cols());
    let (rb, cb) = (b.rows(), b.cols());
    let mut out = ComplexMatrix::zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            let aij = a[(i, j)];
            if aij.re == 0.0 && aij.im == 0.0 {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    out[(i * rb + k, j * cb + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Transposes the chosen factor of a bipartite operator on dimA x dimB.
pub fn partial_transpose(
    m: &ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
    which: Subsystem,
) -> Result<ComplexMatrix> {
    require_bipartite(m, dim_a, dim_b)?;
    let mut out = ComplexMatrix::zeros(m.rows(), m.cols());
    for i in 0..dim_a {
        for j in 0..dim_a {
            for k in 0..dim_b {
                for l in 0..dim_b {
                    let (src_row, src_col) = match which {
                        // (i k),(j l) <- (j k),(i l): transpose A indices.
                        Subsystem::A => (j * dim_b + k, i * dim_b + l),
                        // (i k),(j l) <- (i l),(j k): transpose B indices.
                        Subsystem::B => (i * dim_b + l, j * dim_b + k),
                    };
                    out[(i * dim_b + k, j * dim_b + l)] = m[(src_row, src_col)];
                }
            }
        }
    }
    Ok(out)
}

/// Traces out the chosen factor of a bipartite operator on dimA x dimB.
pub fn partial_trace(
    m: &ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
    traced: Subsystem,
) -> Result<ComplexMatrix> {
    require_bipartite(m, dim_a, dim_b)?;
    match traced {
        Subsystem::B => {
            let mut out = ComplexMatrix::zeros(dim_a, dim_a);
            for i in 0..dim_a {
                for j in 0..dim_a {
                    for k in 0..dim_b {
                        out[(i, j)] += m[(i * dim_b + k, j * dim_b + k)];
                    }
                }
            }
            Ok(out)
        }
        Subsystem::A => {
            let mut out = ComplexMatrix::zeros(dim_b, dim_b);
            for k in 0..dim_b {
                for l in 0..dim_b {
                    for i in 0..dim_a {
                        out[(k, l)] += m[(i * dim_b + k, i * dim_b + l)];
                    }
                }
            }
            Ok(out)
        }
    }
}

fn require_bipartite(m: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<()> {
    if !m.is_square() || m.rows() != dim_a * dim_b || dim_a == 0 || dim_b == 0 {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{}, expected square of dimension {}*{}",
            m.rows(),
            m.cols(),
            dim_a,
            dim_b
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eig;
    use crate::linalg::test_support::assert_close;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::diagonal(&[1.0, -1.0])
    }

    /// Projector onto the Bell state (|00> + |11>)/sqrt(2).
    fn bell_projector() -> ComplexMatrix {
        let ket = ComplexMatrix::ket(&[
            c(1.0 / 2f64.sqrt(), 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(1.0 / 2f64.sqrt(), 0.0),
        ]);
        ket.matmul(&ket.adjoint())
    }

    #[test]
    fn kron_of_identities() {
        let id2 = ComplexMatrix::identity(2);
        assert!(kron(&id2, &id2).max_abs_diff(&ComplexMatrix::identity(4)) <= 1e-15);
    }

    #[test]
    fn kron_sigma_z_with_identity() {
        let out = kron(&sigma_z(), &ComplexMatrix::identity(2));
        let expected = ComplexMatrix::diagonal(&[1.0, 1.0, -1.0, -1.0]);
        assert!(out.max_abs_diff(&expected) <= 1e-15);
    }

    #[test]
    fn kron_entrywise_definition() {
        let a = ComplexMatrix::from_rows(&[
            vec![c(1.0, 1.0), c(0.0, 2.0)],
            vec![c(-1.0, 0.0), c(3.0, -1.0)],
        ])
        .unwrap();
        let b = ComplexMatrix::from_rows(&[
            vec![c(0.5, 0.0), c(0.0, -1.0)],
            vec![c(2.0, 2.0), c(1.0, 0.0)],
        ])
        .unwrap();
        let k = kron(&a, &b);
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    for m in 0..2 {
                        let expected = a[(i, j)] * b[(l, m)];
                        assert!((k[(i * 2 + l, j * 2 + m)] - expected).norm() <= 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn partial_transpose_of_product_state() {
        let rho_a = ComplexMatrix::from_rows(&[
            vec![c(0.5, 0.0), c(0.2, -0.15)],
            vec![c(0.2, 0.15), c(0.5, 0.0)],
        ])
        .unwrap();
        let rho_b = ComplexMatrix::diagonal(&[0.8, 0.2]);
        let joint = kron(&rho_a, &rho_b);
        let pt = partial_transpose(&joint, 2, 2, Subsystem::A).unwrap();
        let expected = kron(&rho_a.transpose(), &rho_b);
        assert!(pt.max_abs_diff(&expected) <= 1e-15);
    }

    #[test]
    fn partial_transpose_is_involutive() {
        let m = bell_projector();
        let twice = partial_transpose(
            &partial_transpose(&m, 2, 2, Subsystem::B).unwrap(),
            2,
            2,
            Subsystem::B,
        )
        .unwrap();
        assert!(twice.max_abs_diff(&m) <= 1e-15);
    }

    #[test]
    fn bell_partial_transpose_spectrum() {
        let pt = partial_transpose(&bell_projector(), 2, 2, Subsystem::A).unwrap();
        let eig = hermitian_eig(&pt).unwrap();
        let expected = [-0.5, 0.5, 0.5, 0.5];
        for (got, want) in eig.eigenvalues.iter().zip(expected.iter()) {
            assert_close(*got, *want, 1e-12);
        }
    }

    #[test]
    fn partial_trace_of_product_state() {
        let rho_a = ComplexMatrix::from_rows(&[
            vec![c(0.7, 0.0), c(0.1, 0.2)],
            vec![c(0.1, -0.2), c(0.3, 0.0)],
        ])
        .unwrap();
        let rho_b = ComplexMatrix::diagonal(&[0.25, 0.75]);
        let joint = kron(&rho_a, &rho_b);
        let reduced = partial_trace(&joint, 2, 2, Subsystem::B).unwrap();
        assert!(reduced.max_abs_diff(&rho_a) <= 1e-15);
    }

    #[test]
    fn bell_marginals_are_maximally_mixed() {
        let half_id = ComplexMatrix::diagonal(&[0.5, 0.5]);
        for side in [Subsystem::A, Subsystem::B] {
            let marginal = partial_trace(&bell_projector(), 2, 2, side).unwrap();
            assert!(marginal.max_abs_diff(&half_id) <= 1e-15);
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let m = ComplexMatrix::identity(6);
        assert!(partial_transpose(&m, 2, 2, Subsystem::A).is_err());
        assert!(partial_trace(&m, 4, 2, Subsystem::B).is_err());
    }
}
