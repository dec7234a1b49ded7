//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong while building operators, mapping them to
/// Pauli sums, synthesizing circuits, or running the dense-matrix checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A ladder operator addresses a mode outside the system.
    #[error("mode {mode} out of range for {n_modes} modes")]
    ModeOutOfRange { mode: usize, n_modes: usize },

    /// A gate or Pauli letter addresses a qubit outside the register.
    #[error("qubit {qubit} out of range for {n_qubits} qubits")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },

    /// Two operands live on registers of different widths.
    #[error("qubit-count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// Dense-matrix operations are capped to keep memory bounded.
    #[error("{n_qubits} qubits exceeds the dense-matrix limit of {max}")]
    TooManyQubits { n_qubits: usize, max: usize },

    /// An excitation reuses a mode on both sides or within one side.
    #[error("excitation modes must be distinct and from/to disjoint")]
    ExcitationOverlap,

    /// A CNOT with control equal to target.
    #[error("cnot control and target coincide on qubit {qubit}")]
    ControlIsTarget { qubit: usize },

    /// Rotation angles must be finite.
    #[error("gate angle is not finite")]
    NonFiniteAngle,

    /// A Pauli rotation needs at least one non-identity letter.
    #[error("rotation axis is the identity string")]
    IdentityAxis,

    /// The matrix handed to the exponential is not anti-Hermitian.
    #[error("matrix is not anti-Hermitian (max |M + M^dag| = {deviation:.3e})")]
    NotAntiHermitian { deviation: f64 },

    /// Sequential rotation synthesis requires purely imaginary weights.
    #[error("generator term {letters} has a coefficient with real part {re:.3e}")]
    NonImaginaryCoefficient { letters: String, re: f64 },

    /// Sequential rotation synthesis requires mutually commuting terms.
    #[error("generator terms {left} and {right} do not commute")]
    NonCommutingTerms { left: String, right: String },

    /// A controlled() argument must be a single-qubit matrix.
    #[error("expected a 2x2 matrix, got {dim}x{dim}")]
    NotTwoByTwo { dim: usize },

    /// Global-phase comparison needs a nonzero reference matrix.
    #[error("reference matrix is numerically zero")]
    ZeroMatrix,

    /// Text input (operator string, excitation spec, system file) was malformed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Malformed JSON for a circuit, Pauli sum, or orbital system.
    #[error("json error: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
