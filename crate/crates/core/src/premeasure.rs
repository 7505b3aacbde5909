//! The premeasurement step: correlating a system with a measurement
//! apparatus before any readout happens.
//!
//! Two constructions are provided and kept deliberately independent. The
//! isometry path applies V = Σ_k X_k ⊗ |k⟩ directly; the Hamiltonian path
//! evolves the joint state under an interaction generator for a finite
//! duration. For the qubit σ_z measurement with the default generator the
//! two agree exactly (the evolution lands on the CNOT), and the
//! verification suites hold them against each other.
//!
//! Ordering convention: system factor first, so a joint ket |s⟩|k⟩ sits at
//! index s·K + k. The apparatus starts in the pure pointer state |0⟩.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{kron, matrix_exp_antihermitian, ComplexMatrix};
use crate::states::{pauli_x, DensityMatrix, Observable, PVM};

/// Tag for the tensor-factor convention. Only system-first exists; the
/// tag records the choice in the type rather than in a comment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorOrdering {
    SystemFirst,
}

/// A premeasurement configuration: which PVM is measured, and the derived
/// system/apparatus dimensions (one pointer state per outcome).
#[derive(Debug, Clone)]
pub struct PremeasurementSetup {
    system_dim: usize,
    apparatus_dim: usize,
    pvm: PVM,
    ordering: TensorOrdering,
}

impl PremeasurementSetup {
    /// The PVM is already validated, so every setup invariant holds by
    /// construction and this cannot fail.
    pub fn new(pvm: PVM) -> Self {
        Self {
            system_dim: pvm.dim(),
            apparatus_dim: pvm.outcomes(),
            pvm,
            ordering: TensorOrdering::SystemFirst,
        }
    }

    pub fn system_dim(&self) -> usize {
        self.system_dim
    }

    pub fn apparatus_dim(&self) -> usize {
        self.apparatus_dim
    }

    pub fn joint_dim(&self) -> usize {
        self.system_dim * self.apparatus_dim
    }

    pub fn pvm(&self) -> &PVM {
        &self.pvm
    }

    pub fn ordering(&self) -> TensorOrdering {
        self.ordering
    }
}

/// A measurement interaction in Hamiltonian form: free system and
/// apparatus parts plus a joint interaction term, switched on for a
/// duration tau (natural units, ħ = 1).
#[derive(Debug, Clone)]
pub struct HamiltonianModel {
    h_s: Observable,
    h_m: Observable,
    h_int: Observable,
    tau: f64,
}

impl HamiltonianModel {
    pub fn new(h_s: Observable, h_m: Observable, h_int: Observable, tau: f64) -> Result<Self> {
        if !(tau > 0.0) {
            return Err(Error::NonpositiveDuration(tau));
        }
        if h_int.dim() != h_s.dim() * h_m.dim() {
            return Err(Error::DimensionMismatch(format!(
                "interaction term has dimension {}, expected {} * {}",
                h_int.dim(),
                h_s.dim(),
                h_m.dim()
            )));
        }
        Ok(Self { h_s, h_m, h_int, tau })
    }

    /// H_tot = H_S ⊗ 𝟙_M + 𝟙_S ⊗ H_M + H_int.
    pub fn total(&self) -> ComplexMatrix {
        let id_s = ComplexMatrix::identity(self.h_s.dim());
        let id_m = ComplexMatrix::identity(self.h_m.dim());
        let free = &kron(self.h_s.matrix(), &id_m) + &kron(&id_s, self.h_m.matrix());
        &free + self.h_int.matrix()
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn system_dim(&self) -> usize {
        self.h_s.dim()
    }

    pub fn apparatus_dim(&self) -> usize {
        self.h_m.dim()
    }

    pub fn joint_dim(&self) -> usize {
        self.h_s.dim() * self.h_m.dim()
    }
}

/// The controlled-shift isometry V = Σ_k X_k ⊗ |k⟩ mapping the system
/// space into system ⊗ apparatus. Columns are indexed by system basis
/// states; V†V = 𝟙 because the projectors are orthogonal and complete.
pub fn premeasurement_isometry(setup: &PremeasurementSetup) -> ComplexMatrix {
    let k_outcomes = setup.apparatus_dim();
    let mut v = ComplexMatrix::zeros(setup.joint_dim(), setup.system_dim());
    for (k, projector) in setup.pvm().projectors().iter().enumerate() {
        let pointer = ComplexMatrix::basis_ket(k_outcomes, k);
        v = &v + &kron(projector, &pointer);
    }
    v
}

/// The premeasurement state ρ_SM = V ρ_in V† on system ⊗ apparatus.
pub fn premeasure_state(
    rho_in: &DensityMatrix,
    setup: &PremeasurementSetup,
) -> Result<DensityMatrix> {
    if rho_in.dim() != setup.system_dim() {
        return Err(Error::DimensionMismatch(format!(
            "input state has dimension {}, setup measures dimension {}",
            rho_in.dim(),
            setup.system_dim()
        )));
    }
    let v = premeasurement_isometry(setup);
    let joint = v.matmul(rho_in.matrix()).matmul(&v.adjoint());
    DensityMatrix::new(joint, vec![setup.system_dim(), setup.apparatus_dim()])
}

/// The two-qubit controlled-NOT with the system as control and the
/// apparatus as target: |s⟩|m⟩ ↦ |s⟩|m ⊕ s⟩.
pub fn cnot_unitary() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[
        vec![1.0, 0.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, 1.0],
        vec![0.0, 0.0, 1.0, 0.0],
    ])
    .expect("static entries")
}

/// The default measurement interaction for the qubit σ_z setup:
/// H_S = H_M = 0 and H_int = (π/2τ)·|1⟩⟨1| ⊗ (𝟙 − σ_x).
///
/// On the |1⟩ sector the evolution over tau is exp(−i(π/2)(𝟙 − σ_x)) =
/// e^{−iπ/2}·e^{i(π/2)σ_x} = (−i)(i σ_x) = σ_x, with the sector phases
/// cancelling exactly, so U(τ) is the CNOT with no residual phase.
pub fn default_measurement_hamiltonian(tau: f64) -> Result<HamiltonianModel> {
    if !(tau > 0.0) {
        return Err(Error::NonpositiveDuration(tau));
    }
    let one_one = ComplexMatrix::diagonal(&[0.0, 1.0]);
    let flip = &ComplexMatrix::identity(2) - &pauli_x();
    let h_int = kron(&one_one, &flip).scale_re(std::f64::consts::FRAC_PI_2 / tau);
    HamiltonianModel::new(
        Observable::zero(2),
        Observable::zero(2),
        Observable::new(h_int)?,
        tau,
    )
}

/// Unitary evolution of a joint state: ρ(t) = U(t) ρ0 U(t)† with
/// U(t) = exp(−i t H_tot).
pub fn evolve_joint(rho0: &DensityMatrix, model: &HamiltonianModel, t: f64) -> Result<DensityMatrix> {
    if rho0.dim() != model.joint_dim() {
        return Err(Error::DimensionMismatch(format!(
            "state has dimension {}, model acts on {}",
            rho0.dim(),
            model.joint_dim()
        )));
    }
    if !(t >= 0.0) {
        return Err(Error::OutOfRange(format!(
            "evolution time t = {t}, expected t >= 0"
        )));
    }
    let u = matrix_exp_antihermitian(&model.total(), t)?;
    let evolved = u.matmul(rho0.matrix()).matmul(&u.adjoint());
    DensityMatrix::new(evolved, rho0.dims().to_vec())
}

/// ρ_in ⊗ |0⟩⟨0|: the joint state before the interaction switches on,
/// with the apparatus pointer at rest.
pub fn joint_with_pointer(rho_in: &DensityMatrix, apparatus_dim: usize) -> Result<DensityMatrix> {
    let mut pointer = ComplexMatrix::zeros(apparatus_dim, apparatus_dim);
    pointer[(0, 0)] = Complex64::new(1.0, 0.0);
    DensityMatrix::new(
        kron(rho_in.matrix(), &pointer),
        vec![rho_in.dim(), apparatus_dim],
    )
}
