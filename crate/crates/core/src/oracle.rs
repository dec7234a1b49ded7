//! Dense-matrix verification engine.
//!
//! This module is the independent ground truth for everything else in the
//! crate: it builds 2^n x 2^n matrices for fermionic operators, Pauli sums,
//! and circuits, exponentiates anti-Hermitian matrices exactly via
//! Hermitian eigendecomposition, and decides equality up to a global phase.
//!
//! [`matrix_of_fermion`] deliberately never touches the symbolic Pauli
//! algebra: every ladder operator becomes an explicit 2x2 block
//! Kronecker-extended with explicit Z factors, and terms are plain matrix
//! products. A bug in the string algebra therefore cannot hide from the
//! cross-check against [`matrix_of_pauli_sum`].
//!
//! Tensor layout: qubit 0 is the rightmost Kronecker factor, so basis index
//! bit k is the state of qubit k.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fermion::{FermionOperator, LadderKind};
use crate::gates::{gate_matrix, pauli_matrix};
use crate::pauli::PauliSum;
use crate::synth::{Circuit, Gate};

/// Dense matrices are capped at this register width.
pub const MAX_QUBITS: usize = 10;

/// A dense 2^n x 2^n complex matrix tagged with its register width.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n_qubits: usize,
    entries: DMatrix<Complex64>,
}

fn check_width(n_qubits: usize) -> Result<()> {
    if n_qubits > MAX_QUBITS {
        return Err(Error::TooManyQubits {
            n_qubits,
            max: MAX_QUBITS,
        });
    }
    Ok(())
}

impl DenseMatrix {
    /// The identity on `n_qubits`.
    pub fn identity(n_qubits: usize) -> Result<Self> {
        check_width(n_qubits)?;
        let dim = 1 << n_qubits;
        Ok(DenseMatrix {
            n_qubits,
            entries: DMatrix::identity(dim, dim),
        })
    }

    /// The zero matrix on `n_qubits`.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        check_width(n_qubits)?;
        let dim = 1 << n_qubits;
        Ok(DenseMatrix {
            n_qubits,
            entries: DMatrix::zeros(dim, dim),
        })
    }

    /// Wraps an existing square matrix whose dimension must be `2^n_qubits`.
    pub fn from_entries(n_qubits: usize, entries: DMatrix<Complex64>) -> Result<Self> {
        check_width(n_qubits)?;
        let dim = 1 << n_qubits;
        if entries.nrows() != dim || entries.ncols() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: entries.nrows(),
            });
        }
        Ok(DenseMatrix { n_qubits, entries })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    /// Matrix product `self * other`; widths must agree.
    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n_qubits, other.n_qubits, "register widths differ");
        DenseMatrix {
            n_qubits: self.n_qubits,
            entries: &self.entries * &other.entries,
        }
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n_qubits, other.n_qubits, "register widths differ");
        DenseMatrix {
            n_qubits: self.n_qubits,
            entries: &self.entries + &other.entries,
        }
    }

    pub fn sub(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n_qubits, other.n_qubits, "register widths differ");
        DenseMatrix {
            n_qubits: self.n_qubits,
            entries: &self.entries - &other.entries,
        }
    }

    pub fn scale(&self, factor: Complex64) -> DenseMatrix {
        DenseMatrix {
            n_qubits: self.n_qubits,
            entries: self.entries.map(|e| e * factor),
        }
    }

    pub fn adjoint(&self) -> DenseMatrix {
        DenseMatrix {
            n_qubits: self.n_qubits,
            entries: self.entries.adjoint(),
        }
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    /// Largest elementwise deviation from `other`.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        self.sub(other).max_abs()
    }

    /// Applies the matrix to a basis-ordered state vector.
    pub fn apply(&self, state: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(state.len(), self.dim(), "state dimension differs");
        let v = nalgebra::DVector::from_column_slice(state);
        (&self.entries * v).iter().cloned().collect()
    }

    /// Anticommutator `{self, other} = self*other + other*self`.
    pub fn anticommutator(&self, other: &DenseMatrix) -> DenseMatrix {
        self.mul(other).add(&other.mul(self))
    }
}

/// Kronecker product with `b` as the lower-significance factor.
fn kron(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a.kronecker(b)
}

/// 2x2 blocks used by the fermionic construction, written out explicitly.
mod blocks {
    use nalgebra::DMatrix;
    use num_complex::Complex64;

    fn m2(entries: [f64; 4]) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(2, 2, &entries.map(|x| Complex64::new(x, 0.0)))
    }

    /// 1/2 (X - iY): flips |0> to |1>, kills |1>.
    pub fn raise() -> DMatrix<Complex64> {
        m2([0.0, 0.0, 1.0, 0.0])
    }

    /// 1/2 (X + iY): flips |1> to |0>, kills |0>.
    pub fn lower() -> DMatrix<Complex64> {
        m2([0.0, 1.0, 0.0, 0.0])
    }

    pub fn parity_z() -> DMatrix<Complex64> {
        m2([1.0, 0.0, 0.0, -1.0])
    }

    pub fn identity() -> DMatrix<Complex64> {
        m2([1.0, 0.0, 0.0, 1.0])
    }
}

/// Dense matrix of a Pauli sum: sum of coefficient-weighted Kronecker
/// chains `letter_{n-1} (x) ... (x) letter_0`.
pub fn matrix_of_pauli_sum(sum: &PauliSum) -> Result<DenseMatrix> {
    let n = sum.n_qubits();
    let mut result = DenseMatrix::zero(n)?;
    for term in sum.terms() {
        let mut chain = DMatrix::<Complex64>::identity(1, 1);
        for k in (0..n).rev() {
            chain = kron(&chain, pauli_matrix(term.letters[k]).entries());
        }
        result.entries += chain.map(|e| e * term.coefficient);
    }
    Ok(result)
}

/// Dense matrix of one ladder operator at mode `p`: the raise/lower block
/// at position p with explicit Z factors below and identities above.
fn ladder_matrix(p: usize, kind: LadderKind, n: usize) -> DMatrix<Complex64> {
    let block = match kind {
        LadderKind::Create => blocks::raise(),
        LadderKind::Annihilate => blocks::lower(),
    };
    let mut chain = DMatrix::<Complex64>::identity(1, 1);
    for k in (0..n).rev() {
        let factor = if k == p {
            block.clone()
        } else if k < p {
            blocks::parity_z()
        } else {
            blocks::identity()
        };
        chain = kron(&chain, &factor);
    }
    chain
}

/// Dense matrix of a fermionic operator, built directly from per-ladder
/// matrices (never through the symbolic Pauli algebra): each term is the
/// written-order product of its ladder matrices, rightmost applied first.
pub fn matrix_of_fermion(op: &FermionOperator, n_qubits: usize) -> Result<DenseMatrix> {
    check_width(n_qubits)?;
    let mut result = DenseMatrix::zero(n_qubits)?;
    for term in op.terms() {
        let dim = 1 << n_qubits;
        let mut product = DMatrix::<Complex64>::identity(dim, dim);
        for ladder in &term.ops {
            if ladder.mode >= n_qubits {
                return Err(Error::ModeOutOfRange {
                    mode: ladder.mode,
                    n_modes: n_qubits,
                });
            }
            product *= ladder_matrix(ladder.mode, ladder.kind, n_qubits);
        }
        result.entries += product.map(|e| e * term.coefficient);
    }
    Ok(result)
}

/// Embeds a single-qubit matrix at qubit `q` of an `n`-qubit register.
fn embed_single(gate: &DMatrix<Complex64>, q: usize, n: usize) -> DMatrix<Complex64> {
    let mut chain = DMatrix::<Complex64>::identity(1, 1);
    for k in (0..n).rev() {
        if k == q {
            chain = kron(&chain, gate);
        } else {
            chain = kron(&chain, &blocks::identity());
        }
    }
    chain
}

/// Full-register CNOT as a basis permutation: flip bit `target` wherever
/// bit `control` is set.
fn cnot_matrix(control: usize, target: usize, n: usize) -> DMatrix<Complex64> {
    let dim = 1usize << n;
    let mut entries = DMatrix::<Complex64>::zeros(dim, dim);
    for col in 0..dim {
        let row = if (col >> control) & 1 == 1 {
            col ^ (1 << target)
        } else {
            col
        };
        entries[(row, col)] = Complex64::new(1.0, 0.0);
    }
    entries
}

/// Dense unitary of a circuit; the first gate is applied first, i.e. it is
/// the rightmost factor of the matrix product.
pub fn matrix_of_circuit(circuit: &Circuit) -> Result<DenseMatrix> {
    let n = circuit.n_qubits();
    check_width(n)?;
    let mut result = DenseMatrix::identity(n)?;
    for gate in circuit.gates() {
        let full = match *gate {
            Gate::Cnot { control, target } => cnot_matrix(control, target, n),
            Gate::H { qubit }
            | Gate::Sx { qubit }
            | Gate::Rx { qubit, .. }
            | Gate::Rz { qubit, .. } => embed_single(gate_matrix(gate).entries(), qubit, n),
        };
        result.entries = full * result.entries;
    }
    Ok(result)
}

/// Largest deviation from anti-Hermiticity accepted by the exponential.
const ANTI_HERMITIAN_TOLERANCE: f64 = 1e-10;

/// Exact unitary `exp(M)` for anti-Hermitian `M`, via eigendecomposition
/// of the Hermitian matrix `iM`: `exp(M) = V diag(e^{-i lambda}) V^dag`.
pub fn expm_antihermitian(m: &DenseMatrix) -> Result<DenseMatrix> {
    let deviation = m.add(&m.adjoint()).max_abs();
    if deviation > ANTI_HERMITIAN_TOLERANCE {
        return Err(Error::NotAntiHermitian { deviation });
    }
    let i = Complex64::new(0.0, 1.0);
    let hermitian = m.entries.map(|e| e * i);
    // symmetrize away float dust before the eigensolver
    let hermitian = (&hermitian + hermitian.adjoint()).map(|e| e * Complex64::new(0.5, 0.0));
    let eigen = hermitian.symmetric_eigen();
    let phases = eigen
        .eigenvalues
        .map(|lambda| Complex64::from_polar(1.0, -lambda));
    let diag = DMatrix::from_diagonal(&phases);
    let entries = &eigen.eigenvectors * diag * eigen.eigenvectors.adjoint();
    Ok(DenseMatrix {
        n_qubits: m.n_qubits,
        entries,
    })
}

/// Outcome of a global-phase comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseComparison {
    pub equal: bool,
    /// The extracted phase `A_entry / B_entry` at B's largest entry.
    pub phase: Complex64,
    /// `max |A - phase * B|`.
    pub residual: f64,
}

/// Decides `A = e^{i gamma} B` within `tol`, anchoring the phase at the
/// largest-modulus entry of `B`.
pub fn equal_up_to_global_phase(
    a: &DenseMatrix,
    b: &DenseMatrix,
    tol: f64,
) -> Result<PhaseComparison> {
    if a.n_qubits != b.n_qubits {
        return Err(Error::DimensionMismatch {
            left: a.n_qubits,
            right: b.n_qubits,
        });
    }
    let mut best = (0usize, 0usize);
    let mut best_norm = 0.0;
    for row in 0..b.dim() {
        for col in 0..b.dim() {
            let norm = b.entry(row, col).norm();
            if norm > best_norm {
                best_norm = norm;
                best = (row, col);
            }
        }
    }
    if best_norm < 1e-12 {
        return Err(Error::ZeroMatrix);
    }
    let phase = a.entry(best.0, best.1) / b.entry(best.0, best.1);
    let residual = a.sub(&b.scale(phase)).max_abs();
    Ok(PhaseComparison {
        equal: residual <= tol,
        phase,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    use crate::fermion::parse_operator;
    use crate::pauli::{jw_map, PauliLetter, PauliTerm};
    use crate::synth::{compile_generator_evolution, Gate};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_sum_matrix_examples() {
        // 1/2 (I - Z0) on one qubit is |1><1|
        let sum = PauliSum::from_terms(
            1,
            vec![
                PauliTerm::new(c(0.5, 0.0), vec![PauliLetter::I]),
                PauliTerm::new(c(-0.5, 0.0), vec![PauliLetter::Z]),
            ],
        )
        .unwrap();
        let m = matrix_of_pauli_sum(&sum).unwrap();
        assert_eq!(m.entry(0, 0), c(0.0, 0.0));
        assert_eq!(m.entry(1, 1), c(1.0, 0.0));
        assert_eq!(m.entry(0, 1), c(0.0, 0.0));

        // bare X on one qubit
        let x = PauliSum::from_terms(1, vec![PauliTerm::new(c(1.0, 0.0), vec![PauliLetter::X])])
            .unwrap();
        let m = matrix_of_pauli_sum(&x).unwrap();
        assert_eq!(m.entry(0, 1), c(1.0, 0.0));
        assert_eq!(m.entry(1, 0), c(1.0, 0.0));

        // identity sum
        let id = PauliSum::identity(2, c(1.0, 0.0));
        let m = matrix_of_pauli_sum(&id).unwrap();
        assert_eq!(m.max_abs_diff(&DenseMatrix::identity(2).unwrap()), 0.0);
    }

    #[test]
    fn fermion_matrix_examples() {
        // a_0^ on one mode = [[0,0],[1,0]]
        let op = parse_operator("0^", 1).unwrap();
        let m = matrix_of_fermion(&op, 1).unwrap();
        assert_eq!(m.entry(1, 0), c(1.0, 0.0));
        assert_eq!(m.entry(0, 0), c(0.0, 0.0));
        assert_eq!(m.entry(0, 1), c(0.0, 0.0));
        assert_eq!(m.entry(1, 1), c(0.0, 0.0));

        // a_0 a_0 = 0 (nothing to remove twice)
        let op = parse_operator("0 0", 1).unwrap();
        let m = matrix_of_fermion(&op, 1).unwrap();
        assert_eq!(m.max_abs(), 0.0);

        // {a_0^, a_1^} = 0
        let op = parse_operator("0^ 1^ + 1^ 0^", 2).unwrap();
        let m = matrix_of_fermion(&op, 2).unwrap();
        assert_eq!(m.max_abs(), 0.0);
    }

    #[test]
    fn circuit_matrix_examples() {
        // empty circuit
        let empty = Circuit::new(2);
        let m = matrix_of_circuit(&empty).unwrap();
        assert_eq!(m.max_abs_diff(&DenseMatrix::identity(2).unwrap()), 0.0);

        // single Hadamard
        let mut circuit = Circuit::new(1);
        circuit.push(Gate::H { qubit: 0 }).unwrap();
        let m = matrix_of_circuit(&circuit).unwrap();
        let s = FRAC_1_SQRT_2;
        assert!((m.entry(0, 0) - c(s, 0.0)).norm() < 1e-15);
        assert!((m.entry(1, 1) - c(-s, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn cnot_embedding_both_directions() {
        // control 0, target 1 on two qubits: |01> -> |11>
        let mut circuit = Circuit::new(2);
        circuit
            .push(Gate::Cnot {
                control: 0,
                target: 1,
            })
            .unwrap();
        let m = matrix_of_circuit(&circuit).unwrap();
        let state = m.apply(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(
            state,
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]
        );

        // control 1, target 0: |10> -> |11>
        let mut circuit = Circuit::new(2);
        circuit
            .push(Gate::Cnot {
                control: 1,
                target: 0,
            })
            .unwrap();
        let m = matrix_of_circuit(&circuit).unwrap();
        let state = m.apply(&[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(
            state,
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]
        );
    }

    #[test]
    fn expm_examples() {
        // exp(0) = I
        let zero = DenseMatrix::zero(1).unwrap();
        let u = expm_antihermitian(&zero).unwrap();
        assert!(u.max_abs_diff(&DenseMatrix::identity(1).unwrap()) < 1e-14);

        // exp(-i (pi/2) X) = -iX
        let x = matrix_of_pauli_sum(
            &PauliSum::from_terms(1, vec![PauliTerm::new(c(1.0, 0.0), vec![PauliLetter::X])])
                .unwrap(),
        )
        .unwrap();
        let m = x.scale(c(0.0, -PI / 2.0));
        let u = expm_antihermitian(&m).unwrap();
        assert!(u.max_abs_diff(&x.scale(c(0.0, -1.0))) < 1e-12);
    }

    #[test]
    fn expm_rejects_non_antihermitian() {
        let op = parse_operator("0^ 0", 1).unwrap();
        let m = matrix_of_fermion(&op, 1).unwrap();
        assert!(matches!(
            expm_antihermitian(&m),
            Err(Error::NotAntiHermitian { .. })
        ));
    }

    #[test]
    fn expm_output_is_unitary() {
        let op = parse_operator("3^ 1^ 2 0 + (-1,0)* 0^ 2^ 1 3", 4).unwrap();
        let g = matrix_of_fermion(&op, 4).unwrap().scale(c(0.3, 0.0));
        let u = expm_antihermitian(&g).unwrap();
        let gram = u.adjoint().mul(&u);
        assert!(gram.max_abs_diff(&DenseMatrix::identity(4).unwrap()) <= 1e-10);
    }

    #[test]
    fn global_phase_comparison() {
        // SX = e^{i pi/4} Rx(pi/2) embedded on one qubit
        let mut sx = Circuit::new(1);
        sx.push(Gate::Sx { qubit: 0 }).unwrap();
        let mut rx = Circuit::new(1);
        rx.push(Gate::Rx {
            qubit: 0,
            angle: FRAC_PI_2,
        })
        .unwrap();
        let a = matrix_of_circuit(&sx).unwrap();
        let b = matrix_of_circuit(&rx).unwrap();
        let cmp = equal_up_to_global_phase(&a, &b, 1e-12).unwrap();
        assert!(cmp.equal);
        let expected = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        assert!((cmp.phase - expected).norm() < 1e-12);

        // identical matrices give phase one
        let cmp = equal_up_to_global_phase(&a, &a, 1e-12).unwrap();
        assert!(cmp.equal);
        assert!((cmp.phase - c(1.0, 0.0)).norm() < 1e-12);

        // zero reference is rejected
        let zero = DenseMatrix::zero(1).unwrap();
        assert!(matches!(
            equal_up_to_global_phase(&a, &zero, 1e-12),
            Err(Error::ZeroMatrix)
        ));
    }

    #[test]
    fn distinct_qubit_operators_commute() {
        let x0x1 = matrix_of_pauli_sum(
            &PauliSum::from_terms(
                2,
                vec![PauliTerm::new(
                    c(1.0, 0.0),
                    vec![PauliLetter::X, PauliLetter::X],
                )],
            )
            .unwrap(),
        )
        .unwrap();
        // build it the other way round: X1 first, then X0, as a circuit of
        // two separate single-qubit sums multiplied in both orders
        let x0 = matrix_of_pauli_sum(
            &PauliSum::from_terms(
                2,
                vec![PauliTerm::new(
                    c(1.0, 0.0),
                    vec![PauliLetter::X, PauliLetter::I],
                )],
            )
            .unwrap(),
        )
        .unwrap();
        let x1 = matrix_of_pauli_sum(
            &PauliSum::from_terms(
                2,
                vec![PauliTerm::new(
                    c(1.0, 0.0),
                    vec![PauliLetter::I, PauliLetter::X],
                )],
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(x0.mul(&x1).max_abs_diff(&x1.mul(&x0)), 0.0);
        assert_eq!(x0.mul(&x1).max_abs_diff(&x0x1), 0.0);
    }

    #[test]
    fn car_relations_small() {
        for n in 1..=3usize {
            for p in 0..n {
                for q in 0..n {
                    let ap =
                        matrix_of_fermion(&parse_operator(&format!("{p}"), n).unwrap(), n).unwrap();
                    let aq_dag =
                        matrix_of_fermion(&parse_operator(&format!("{q}^"), n).unwrap(), n)
                            .unwrap();
                    let mut expected = DenseMatrix::zero(n).unwrap();
                    if p == q {
                        expected = DenseMatrix::identity(n).unwrap();
                    }
                    assert!(
                        ap.anticommutator(&aq_dag).max_abs_diff(&expected) <= 1e-12,
                        "{{a_{p}, a_{q}^}} failed at n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn width_limit_enforced() {
        assert!(matches!(
            DenseMatrix::identity(11),
            Err(Error::TooManyQubits { .. })
        ));
    }

    #[test]
    fn jw_theorem_on_the_double_excitation() {
        let op = parse_operator("3^ 1^ 2 0", 4).unwrap();
        let symbolic = matrix_of_pauli_sum(&jw_map(&op, 4).unwrap()).unwrap();
        let direct = matrix_of_fermion(&op, 4).unwrap();
        assert!(symbolic.max_abs_diff(&direct) <= 1e-12);
    }

    #[test]
    fn generator_circuit_matches_expm() {
        let op = parse_operator("1^ 0 + (-1,0)* 0^ 1", 2).unwrap();
        let theta = 0.7;
        let generator = jw_map(&op, 2).unwrap();
        let circuit = compile_generator_evolution(&generator, theta).unwrap();
        let direct =
            expm_antihermitian(&matrix_of_fermion(&op, 2).unwrap().scale(c(theta, 0.0))).unwrap();
        let synthesized = matrix_of_circuit(&circuit).unwrap();
        let cmp = equal_up_to_global_phase(&synthesized, &direct, 1e-10).unwrap();
        assert!(cmp.equal, "residual {}", cmp.residual);
    }
}
