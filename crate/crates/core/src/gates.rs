//! Exact matrix definitions for the gate set.
//!
//! Rx is the rotation `exp(-i (theta/2) X)`; SX is the principal square
//! root of X. The two quarter-turns differ only by the global phase
//! `e^{-i pi/4}`, which is unobservable alone but becomes a relative —
//! observable — phase once the gate is controlled.
//! [`phase_relation_check`] verifies the three identities tying them
//! together.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::PauliLetter;
use crate::synth::Gate;

/// A dense 2x2 or 4x4 unitary.
#[derive(Debug, Clone, PartialEq)]
pub struct GateMatrix {
    entries: DMatrix<Complex64>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl GateMatrix {
    fn from_rows_2(rows: [[Complex64; 2]; 2]) -> Self {
        GateMatrix {
            entries: DMatrix::from_row_slice(
                2,
                2,
                &[rows[0][0], rows[0][1], rows[1][0], rows[1][1]],
            ),
        }
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

    /// Matrix product; both operands must have the same dimension.
    pub fn mul(&self, other: &GateMatrix) -> GateMatrix {
        assert_eq!(self.dim(), other.dim(), "gate matrix dimensions differ");
        GateMatrix {
            entries: &self.entries * &other.entries,
        }
    }

    pub fn adjoint(&self) -> GateMatrix {
        GateMatrix {
            entries: self.entries.adjoint(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> GateMatrix {
        GateMatrix {
            entries: self.entries.map(|e| e * factor),
        }
    }

    /// Largest elementwise deviation from `other`.
    pub fn max_abs_diff(&self, other: &GateMatrix) -> f64 {
        assert_eq!(self.dim(), other.dim(), "gate matrix dimensions differ");
        (&self.entries - &other.entries)
            .iter()
            .map(|e| e.norm())
            .fold(0.0, f64::max)
    }

    /// Checks `M^dag M = I` elementwise.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let product = self.entries.adjoint() * &self.entries;
        let identity = DMatrix::<Complex64>::identity(self.dim(), self.dim());
        (product - identity)
            .iter()
            .map(|e| e.norm())
            .fold(0.0, f64::max)
            <= tol
    }

    /// Applies the matrix to a basis-ordered state vector.
    pub fn apply(&self, state: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(state.len(), self.dim(), "state dimension differs");
        let v = nalgebra::DVector::from_column_slice(state);
        (&self.entries * v).iter().cloned().collect()
    }
}

/// The 2x2 matrix of a single Pauli letter, basis `|0> = (1, 0)^T`.
pub fn pauli_matrix(letter: PauliLetter) -> GateMatrix {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    match letter {
        PauliLetter::I => GateMatrix::from_rows_2([[o, z], [z, o]]),
        PauliLetter::X => GateMatrix::from_rows_2([[z, o], [o, z]]),
        PauliLetter::Y => GateMatrix::from_rows_2([[z, c(0.0, -1.0)], [c(0.0, 1.0), z]]),
        PauliLetter::Z => GateMatrix::from_rows_2([[o, z], [z, -o]]),
    }
}

/// The exact matrix of a gate: 2x2 for the single-qubit kinds, the
/// standard 4x4 for CNOT (control on the most significant bit).
pub fn gate_matrix(gate: &Gate) -> GateMatrix {
    match *gate {
        Gate::H { .. } => {
            let s = c(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            GateMatrix::from_rows_2([[s, s], [s, -s]])
        }
        Gate::Rx { angle, .. } => {
            let half = angle / 2.0;
            let cos = c(half.cos(), 0.0);
            let msin = c(0.0, -half.sin());
            GateMatrix::from_rows_2([[cos, msin], [msin, cos]])
        }
        Gate::Rz { angle, .. } => {
            let half = angle / 2.0;
            GateMatrix::from_rows_2([
                [Complex64::from_polar(1.0, -half), c(0.0, 0.0)],
                [c(0.0, 0.0), Complex64::from_polar(1.0, half)],
            ])
        }
        Gate::Sx { .. } => {
            GateMatrix::from_rows_2([[c(0.5, 0.5), c(0.5, -0.5)], [c(0.5, -0.5), c(0.5, 0.5)]])
        }
        Gate::Cnot { .. } => {
            let x = pauli_matrix(PauliLetter::X);
            controlled(&x).expect("X is 2x2")
        }
    }
}

/// Embeds a 2x2 matrix as the controlled block `diag(I, g)`, with the
/// control on the most significant bit of the two-qubit index.
pub fn controlled(gate: &GateMatrix) -> Result<GateMatrix> {
    if gate.dim() != 2 {
        return Err(Error::NotTwoByTwo { dim: gate.dim() });
    }
    let mut entries = DMatrix::<Complex64>::identity(4, 4);
    for row in 0..2 {
        for col in 0..2 {
            entries[(2 + row, 2 + col)] = gate.entry(row, col);
        }
    }
    Ok(GateMatrix { entries })
}

/// One verified identity of the quarter-turn comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub deviation: f64,
    pub passed: bool,
}

/// Result of [`phase_relation_check`]; all three identities at 1e-12.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseRelationReport {
    pub checks: [IdentityCheck; 3],
}

impl PhaseRelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

const IDENTITY_TOLERANCE: f64 = 1e-12;

/// Verifies `(Rx(pi/2))^2 = -iX`, `(SX)^2 = X`, and
/// `SX = e^{i pi/4} Rx(pi/2)` elementwise.
pub fn phase_relation_check() -> PhaseRelationReport {
    let rx = gate_matrix(&Gate::Rx {
        qubit: 0,
        angle: std::f64::consts::FRAC_PI_2,
    });
    let sx = gate_matrix(&Gate::Sx { qubit: 0 });
    let x = pauli_matrix(PauliLetter::X);

    let check = |name: &'static str, deviation: f64| IdentityCheck {
        name,
        deviation,
        passed: deviation <= IDENTITY_TOLERANCE,
    };

    let rx_squared = rx.mul(&rx).max_abs_diff(&x.scale(c(0.0, -1.0)));
    let sx_squared = sx.mul(&sx).max_abs_diff(&x);
    let phase = rx
        .scale(Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4))
        .max_abs_diff(&sx);

    PhaseRelationReport {
        checks: [
            check("rx(pi/2)^2 = -iX", rx_squared),
            check("sx^2 = X", sx_squared),
            check("sx = e^{i pi/4} rx(pi/2)", phase),
        ],
    }
}
