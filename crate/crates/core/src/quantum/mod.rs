//! Complex-matrix checks for quantum implementations of bipartite gates.
//!
//! Everything is generic over the float type; `*F64` aliases fix `f64`.

pub mod channel;
pub mod evcond;
pub mod gate;
pub mod linalg;
pub mod matrix;
pub mod pauli;

use thiserror::Error;

pub use channel::{
    choi_distance, unitary_choi, zigzag1_channel, zigzag1_kraus, zigzag1_report, ChoiMatrix, ChoiMatrixF64,
    Zigzag1Report,
};
pub use evcond::{evcond_check, reduced_char_poly, reduced_state, EvcondVerdict, EvcondWitness, EVCOND_TOL};
pub use gate::{basis_states, GateData, NamedState, UnitaryGate, UnitaryGateF64};
pub use linalg::{char_poly, hermitian_eigenvalues, is_positive_semidefinite, CharPoly, CharPolyF64};
pub use matrix::{CMatrix, CMatrixF64, Real};
pub use pauli::{is_clifford_22, pauli_decomposition, CliffordVerdict, PauliString, Tableau};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuantumError {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("matrix is not unitary (defect {0:.3e})")]
    NotUnitary(f64),
    #[error("state is not normalised (norm {0})")]
    NotNormalized(f64),
    #[error("gate is not Clifford: {0} is not mapped to a Pauli string")]
    NotClifford(PauliString),
    #[error("state lists must be non-empty")]
    EmptyStates,
}
