//! Compiler for fermionic excitation operators.
//!
//! The crate turns second-quantized excitation operators into qubit Pauli
//! sums via the Jordan-Wigner mapping and synthesizes parameterized gate
//! circuits for their unitary exponentials. Every compilation path is
//! backed by a dense-matrix oracle that rebuilds the same linear map from
//! first principles and checks the results entrywise.
//!
//! Module map:
//!
//! - [`fermion`] — ladder-operator products, excitations, anti-Hermitian
//!   generators, and the operator text notation;
//! - [`orbitals`] — spin-orbital systems and allowed-excitation
//!   enumeration;
//! - [`pauli`] — exact Pauli-string algebra and the Jordan-Wigner
//!   transform;
//! - [`synth`] — rotation-circuit synthesis (basis change, CNOT parity
//!   ladder, Rz, uncompute) and circuit serialization;
//! - [`gates`] — exact gate matrices and the Rx(pi/2) vs sqrt(X) phase
//!   relations;
//! - [`oracle`] — dense 2^n x 2^n verification engine: matrices for
//!   operators, sums, and circuits, exact exponentials, global-phase
//!   comparison.

pub mod error;
pub mod fermion;
pub mod gates;
pub mod oracle;
pub mod orbitals;
pub mod pauli;
pub mod synth;

pub use error::{Error, Result};
pub use fermion::{
    anti_hermitian_generator, excitation_to_operator, parse_operator, Excitation, ExcitationKind,
    FermionOperator, FermionTerm, LadderKind, LadderOp,
};
pub use gates::{controlled, gate_matrix, pauli_matrix, phase_relation_check, GateMatrix};
pub use oracle::{
    equal_up_to_global_phase, expm_antihermitian, matrix_of_circuit, matrix_of_fermion,
    matrix_of_pauli_sum, DenseMatrix, PhaseComparison,
};
pub use orbitals::{
    enumerate_doubles, enumerate_singles, h2_sto3g, OrbitalSystem, Spin, SpinOrbital,
};
pub use pauli::{jw_ladder, jw_map, sum_multiply, term_multiply, PauliLetter, PauliSum, PauliTerm};
pub use synth::{
    cnot_direction_variant, compile_generator_evolution, compile_generator_evolution_with,
    compile_pauli_rotation, Circuit, Gate, PauliRotation, TargetChoice,
};
