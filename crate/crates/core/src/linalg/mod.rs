//! Dense complex linear algebra sized for small quantum systems.
//!
//! Everything here works on [`ComplexMatrix`], a row-major dense matrix of
//! `Complex64`. Dimensions in this crate stay in the single digits (a qubit
//! joined to a pointer register), so the implementations favor clarity and
//! numerical robustness over asymptotic speed: the eigensolver is a cyclic
//! Jacobi iteration, and matrix functions go through the spectral
//! decomposition.

mod eigen;
mod functions;
mod matrix;
mod tensor;

pub use eigen::{hermitian_eig, EigenDecomposition};
pub use functions::{
    anticommutator, commutator, matrix_exp_antihermitian, matrix_sqrt_psd, trace_norm,
};
pub use matrix::ComplexMatrix;
pub use num_complex::Complex64;
pub use tensor::{kron, partial_trace, partial_transpose, Subsystem};
