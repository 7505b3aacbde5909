//! Validated quantum state and measurement types.
//!
//! [`DensityMatrix`], [`Observable`], and [`PVM`] enforce their defining
//! axioms at construction, so downstream code never re-checks positivity
//! or completeness. Qubit states additionally carry the Bloch picture:
//! ρ = ½(𝟙 + n·σ) with |n| ≤ 1, in Cartesian ([`BlochVector`]) or
//! spherical ([`SphericalBloch`]) coordinates.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::rng::SplitMix64;
use crate::tolerances;

/// Pauli σ_x in the standard basis.
pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).expect("static entries")
}

/// Pauli σ_y = [[0, −i], [i, 0]].
pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, -1.0)],
        vec![Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.0)],
    ])
    .expect("static entries")
}

/// Pauli σ_z = diag(1, −1).
pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::diagonal(&[1.0, -1.0])
}

/// v·σ = v_x σ_x + v_y σ_y + v_z σ_z for a real 3-vector v.
pub fn pauli_dot(v: [f64; 3]) -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![
            Complex64::new(v[2], 0.0),
            Complex64::new(v[0], -v[1]),
        ],
        vec![
            Complex64::new(v[0], v[1]),
            Complex64::new(-v[2], 0.0),
        ],
    ])
    .expect("finite entries")
}

/// Checks that `m` is a unit 3-vector to within 1e-12 on the norm.
pub fn require_unit_direction(m: [f64; 3]) -> Result<()> {
    let norm = (m[0] * m[0] + m[1] * m[1] + m[2] * m[2]).sqrt();
    if !norm.is_finite() || (norm - 1.0).abs() > 1e-12 {
        return Err(Error::NotUnitDirection { norm });
    }
    Ok(())
}

/// Bloch vector n = (n_x, n_y, n_z) with |n|² ≤ 1 (up to roundoff slack).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub n_x: f64,
    pub n_y: f64,
    pub n_z: f64,
}

impl BlochVector {
    pub fn new(n_x: f64, n_y: f64, n_z: f64) -> Result<Self> {
        let b = Self { n_x, n_y, n_z };
        b.check()?;
        Ok(b)
    }

    /// Revalidates the ball constraint. Fields are public, so operations
    /// consuming a BlochVector call this rather than trusting the caller.
    pub fn check(&self) -> Result<()> {
        let sq = self.norm_squared();
        if !sq.is_finite() || sq > 1.0 + tolerances::BLOCH_BALL_SLACK {
            return Err(Error::BlochOutOfBall { norm: sq.sqrt() });
        }
        Ok(())
    }

    pub fn norm_squared(&self) -> f64 {
        self.n_x * self.n_x + self.n_y * self.n_y + self.n_z * self.n_z
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn components(&self) -> [f64; 3] {
        [self.n_x, self.n_y, self.n_z]
    }
}

/// Bloch vector in spherical form: length n, polar angle θ from the z
/// axis, azimuthal angle φ in the x-y plane. Angles in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalBloch {
    pub n: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SphericalBloch {
    pub fn new(n: f64, theta: f64, phi: f64) -> Result<Self> {
        if !n.is_finite() || !(0.0..=1.0).contains(&n) {
            return Err(Error::OutOfRange(format!(
                "Bloch length n = {n}, expected [0, 1]"
            )));
        }
        if !theta.is_finite() || !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::OutOfRange(format!(
                "polar angle theta = {theta}, expected [0, pi]"
            )));
        }
        if !phi.is_finite() || !(0.0..2.0 * std::f64::consts::PI).contains(&phi) {
            return Err(Error::OutOfRange(format!(
                "azimuthal angle phi = {phi}, expected [0, 2*pi)"
            )));
        }
        Ok(Self { n, theta, phi })
    }
}

/// Standard spherical map: n = (n sinθ cosφ, n sinθ sinφ, n cosθ).
pub fn spherical_to_cartesian(s: &SphericalBloch) -> BlochVector {
    let sin_theta = s.theta.sin();
    BlochVector {
        n_x: s.n * sin_theta * s.phi.cos(),
        n_y: s.n * sin_theta * s.phi.sin(),
        n_z: s.n * s.theta.cos(),
    }
}

/// A density matrix: Hermitian, trace one, positive semidefinite, with a
/// recorded tensor factorization (`dims` multiply to the matrix dimension).
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    /// Validates all density-matrix axioms. Positivity is checked through
    /// a full eigendecomposition; at the dimensions this crate handles
    /// (at most 8) that costs microseconds and catches real bugs.
    pub fn new(matrix: ComplexMatrix, dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.iter().product::<usize>() != matrix.rows() {
            return Err(Error::DimensionMismatch(format!(
                "subsystem dims {:?} do not multiply to matrix dimension {}",
                dims,
                matrix.rows()
            )));
        }
        matrix.require_hermitian(tolerances::HERMITICITY)?;
        let tr = matrix.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::InconsistentInputs(format!(
                "density matrix trace = {tr}, expected 1"
            )));
        }
        let eig = hermitian_eig(&matrix)?;
        let min = eig.eigenvalues[0];
        if min < -tolerances::PSD_CLAMP {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min,
            });
        }
        Ok(Self { matrix, dims })
    }

    /// Wraps a matrix as a single-system state (dims = [d]).
    pub fn from_matrix(matrix: ComplexMatrix) -> Result<Self> {
        let d = matrix.rows();
        Self::new(matrix, vec![d])
    }

    /// Reinterprets the tensor factorization without re-running the
    /// (already established) state axioms.
    pub fn with_dims(self, dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.iter().product::<usize>() != self.matrix.rows() {
            return Err(Error::DimensionMismatch(format!(
                "subsystem dims {:?} do not multiply to matrix dimension {}",
                dims,
                self.matrix.rows()
            )));
        }
        Ok(Self {
            matrix: self.matrix,
            dims,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// A physical observable: a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct Observable {
    matrix: ComplexMatrix,
}

impl Observable {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "observable must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        matrix.require_hermitian(tolerances::HERMITICITY)?;
        Ok(Self { matrix })
    }

    /// The qubit observable m·σ for a unit direction m.
    pub fn along(m: [f64; 3]) -> Result<Self> {
        require_unit_direction(m)?;
        Self::new(pauli_dot(m))
    }

    /// The zero operator (a valid, if dull, observable; used as the free
    /// Hamiltonian in measurement models).
    pub fn zero(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::zeros(dim, dim),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// A projective measurement: an ordered list of mutually orthogonal
/// projectors summing to the identity. Projectors may have any rank.
#[derive(Debug, Clone)]
pub struct PVM {
    projectors: Vec<ComplexMatrix>,
}

impl PVM {
    pub fn new(projectors: Vec<ComplexMatrix>) -> Result<Self> {
        let tol = tolerances::PVM_AXIOMS;
        let Some(first) = projectors.first() else {
            return Err(Error::InvalidPvm("empty projector list".into()));
        };
        let dim = first.rows();
        for (k, p) in projectors.iter().enumerate() {
            if !p.is_square() || p.rows() != dim {
                return Err(Error::InvalidPvm(format!(
                    "projector {k} is {}x{}, expected {dim}x{dim}",
                    p.rows(),
                    p.cols()
                )));
            }
            if p.hermiticity_deviation() > tol {
                return Err(Error::InvalidPvm(format!("projector {k} is not Hermitian")));
            }
            let idem = p.matmul(p).max_abs_diff(p);
            if idem > tol {
                return Err(Error::InvalidPvm(format!(
                    "projector {k} is not idempotent (deviation {idem:.3e})"
                )));
            }
        }
        for j in 0..projectors.len() {
            for k in 0..projectors.len() {
                if j == k {
                    continue;
                }
                let cross = projectors[j].matmul(&projectors[k]).max_abs();
                if cross > tol {
                    return Err(Error::InvalidPvm(format!(
                        "projectors {j} and {k} are not orthogonal (overlap {cross:.3e})"
                    )));
                }
            }
        }
        let mut sum = ComplexMatrix::zeros(dim, dim);
        for p in &projectors {
            sum = &sum + p;
        }
        let completeness = sum.max_abs_diff(&ComplexMatrix::identity(dim));
        if completeness > tol {
            return Err(Error::InvalidPvm(format!(
                "projectors do not sum to identity (deviation {completeness:.3e})"
            )));
        }
        Ok(Self { projectors })
    }

    pub fn projectors(&self) -> &[ComplexMatrix] {
        &self.projectors
    }

    /// Number of measurement outcomes.
    pub fn outcomes(&self) -> usize {
        self.projectors.len()
    }

    /// Dimension of the measured system.
    pub fn dim(&self) -> usize {
        self.projectors[0].rows()
    }
}

/// ρ = ½(𝟙 + n·σ), the qubit state with Bloch vector n.
pub fn density_from_bloch(b: &BlochVector) -> Result<DensityMatrix> {
    b.check()?;
    let m = ComplexMatrix::from_rows(&[
        vec![
            Complex64::new((1.0 + b.n_z) / 2.0, 0.0),
            Complex64::new(b.n_x / 2.0, -b.n_y / 2.0),
        ],
        vec![
            Complex64::new(b.n_x / 2.0, b.n_y / 2.0),
            Complex64::new((1.0 - b.n_z) / 2.0, 0.0),
        ],
    ])?;
    DensityMatrix::from_matrix(m)
}

/// Inverse of [`density_from_bloch`]: n_i = Tr(ρ σ_i).
pub fn bloch_from_density(rho: &DensityMatrix) -> Result<BlochVector> {
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "Bloch coordinates need a qubit, got dimension {}",
            rho.dim()
        )));
    }
    let m = rho.matrix();
    BlochVector::new(
        (m.matmul(&pauli_x())).trace().re,
        (m.matmul(&pauli_y())).trace().re,
        (m.matmul(&pauli_z())).trace().re,
    )
}

/// Spectral projectors of a Hermitian observable, one per distinct
/// eigenvalue, ordered by descending eigenvalue.
///
/// Eigenvalues closer than 1e-9 are treated as one degenerate outcome and
/// merged into a single projector, so roundoff-split degeneracies (an
/// identity block perturbed at the 1e-15 level, say) do not multiply the
/// outcome count. The descending order puts the +1 projector of σ_z
/// first, which is the pointer-label convention used throughout.
pub fn pvm_from_observable(x: &Observable) -> Result<PVM> {
    let eig = hermitian_eig(x.matrix())?;
    let dim = x.dim();
    let v = &eig.eigenvectors;

    // Eigenvalues arrive ascending. Walk them, cutting a new group when
    // the gap to the previous value exceeds the grouping tolerance.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..dim {
        let start_new = match groups.last() {
            Some(g) => {
                let prev = eig.eigenvalues[*g.last().expect("groups are nonempty")];
                eig.eigenvalues[i] - prev > tolerances::EIGENVALUE_GROUPING
            }
            None => true,
        };
        if start_new {
            groups.push(vec![i]);
        } else {
            groups.last_mut().expect("just checked").push(i);
        }
    }

    // Descending eigenvalue order.
    groups.reverse();

    let mut projectors = Vec::with_capacity(groups.len());
    for group in &groups {
        let mut p = ComplexMatrix::zeros(dim, dim);
        for &col in group {
            for a in 0..dim {
                for b in 0..dim {
                    let add = v[(a, col)] * v[(b, col)].conj();
                    p[(a, b)] += add;
                }
            }
        }
        projectors.push(p);
    }
    PVM::new(projectors)
}

/// A random mixed state of the given rank: ρ = GG†/Tr(GG†) with G a
/// dim × rank matrix of standard complex Gaussian entries.
pub fn random_density(dim: usize, rank: usize, seed: u64) -> Result<DensityMatrix> {
    let mut rng = SplitMix64::new(seed);
    random_density_with(&mut rng, dim, rank)
}

/// [`random_density`] drawing from a caller-owned generator, for code
/// that needs a stream of states from one seed.
pub fn random_density_with(rng: &mut SplitMix64, dim: usize, rank: usize) -> Result<DensityMatrix> {
    if rank == 0 || rank > dim || dim == 0 {
        return Err(Error::BadRank { rank, dim });
    }
    let g = ComplexMatrix::from_fn(dim, rank, |_, _| {
        Complex64::new(rng.next_gaussian(), rng.next_gaussian())
    });
    let gg = g.matmul(&g.adjoint());
    let tr = gg.trace().re;
    DensityMatrix::from_matrix(gg.scale_re(1.0 / tr))
}

/// A random Hermitian matrix: (A + A†)/2 with standard complex Gaussian A.
pub fn random_hermitian(rng: &mut SplitMix64, dim: usize) -> ComplexMatrix {
    let a = ComplexMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.next_gaussian(), rng.next_gaussian())
    });
    (&a + &a.adjoint()).scale_re(0.5)
}

/// A random unitary: the eigenvector matrix of a random Hermitian draw.
/// Not Haar-distributed, but deterministic and unitary to solver
/// precision, which is all the property suites need.
pub fn random_unitary(rng: &mut SplitMix64, dim: usize) -> ComplexMatrix {
    let h = random_hermitian(rng, dim);
    hermitian_eig(&h)
        .expect("random Hermitian matrices are exactly Hermitian by construction")
        .eigenvectors
}
