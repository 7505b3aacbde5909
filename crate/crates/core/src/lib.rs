//! Numerical study of premeasurement: how much entanglement the unitary
//! stage of a quantum measurement creates between a system and its
//! apparatus, and how that entanglement is pinned down by two properties
//! of the input state alone.
//!
//! For a qubit ρ = ½(𝟙 + n·σ) measured along σ_z, the negativity of the
//! premeasurement output obeys a closed relation in the Wigner–Yanase
//! skew information ℐ(ρ, σ_z) and the mixedness ℳ(ρ):
//!
//! ```text
//! 𝒩 = n · √( ℐ / (1 − √(2ℳ)) ) / 2,    n = √(1 − 2ℳ).
//! ```
//!
//! The crate builds both sides from scratch and holds them against each
//! other: a dense-matrix linear-algebra floor ([`linalg`]), states and
//! measurements ([`states`]), the information measures ([`measures`]),
//! the premeasurement channel by isometry and by Hamiltonian evolution
//! ([`premeasure`]), entanglement negativity via partial transpose
//! ([`entangle`]), the qubit closed forms ([`qubit_analytic`]), seeded
//! property suites ([`verify`]), and a CLI ([`cli`]) for sweeps, demos,
//! and verification runs.
//!
//! Everything is deterministic: randomized checks derive from explicit
//! [`rng`] seeds, and numeric gates live in one place ([`tolerances`]).

pub mod cli;
pub mod entangle;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod premeasure;
pub mod qubit_analytic;
pub mod rng;
pub mod states;
pub mod tolerances;
pub mod verify;

pub use error::{Error, Result};
