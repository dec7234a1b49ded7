//! Circuit synthesis for exponentials of Pauli strings.
//!
//! A weight-w rotation `exp(-i (angle/2) P)` compiles with the standard
//! four-step recipe:
//!
//! 1. basis change on every non-identity qubit: H for X, Rx(pi/2) for Y,
//!    nothing for Z;
//! 2. a CNOT parity ladder over the non-identity qubits;
//! 3. Rz(angle) on the ladder target;
//! 4. the exact mirror of steps 2 and 1.
//!
//! The ladder orientation is a free choice (the parity product Z...Z is
//! symmetric); [`compile_pauli_rotation`] targets the highest involved
//! qubit, and [`cnot_direction_variant`] exposes the other option. A
//! commuting sum of purely imaginary weighted strings — the Jordan-Wigner
//! image of an anti-Hermitian generator — compiles to one rotation per
//! term via [`compile_generator_evolution`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliSum, PauliTerm};

/// One gate of the target set.
///
/// Serialized gate names are `h`, `rx`, `rz`, `sx`, `cx`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "gate", rename_all = "lowercase")]
pub enum Gate {
    H {
        qubit: usize,
    },
    Rx {
        qubit: usize,
        angle: f64,
    },
    Rz {
        qubit: usize,
        angle: f64,
    },
    Sx {
        qubit: usize,
    },
    #[serde(rename = "cx")]
    Cnot {
        control: usize,
        target: usize,
    },
}

impl Gate {
    /// The inverse gate: rotations negate their angle, H and CNOT are
    /// self-inverse. SX has no inverse in the set and is rejected by the
    /// callers that need mirrors.
    pub fn inverse(&self) -> Option<Gate> {
        match *self {
            Gate::H { qubit } => Some(Gate::H { qubit }),
            Gate::Rx { qubit, angle } => Some(Gate::Rx {
                qubit,
                angle: -angle,
            }),
            Gate::Rz { qubit, angle } => Some(Gate::Rz {
                qubit,
                angle: -angle,
            }),
            Gate::Cnot { control, target } => Some(Gate::Cnot { control, target }),
            Gate::Sx { .. } => None,
        }
    }

    fn validate(&self, n_qubits: usize) -> Result<()> {
        let check = |qubit: usize| {
            if qubit >= n_qubits {
                Err(Error::QubitOutOfRange { qubit, n_qubits })
            } else {
                Ok(())
            }
        };
        match *self {
            Gate::H { qubit } | Gate::Sx { qubit } => check(qubit),
            Gate::Rx { qubit, angle } | Gate::Rz { qubit, angle } => {
                if !angle.is_finite() {
                    return Err(Error::NonFiniteAngle);
                }
                check(qubit)
            }
            Gate::Cnot { control, target } => {
                if control == target {
                    return Err(Error::ControlIsTarget { qubit: control });
                }
                check(control)?;
                check(target)
            }
        }
    }
}

/// An ordered gate list on a fixed register.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Self {
        Circuit {
            n_qubits,
            gates: Vec::new(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Appends a gate after validating indices and angle.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Appends every gate of `other`, which must have the same width.
    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        if other.n_qubits != self.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    /// JSON gate list, e.g.
    /// `[{"gate":"rx","qubit":0,"angle":1.5707963267948966}, ...]`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.gates).expect("gate list serializes")
    }

    /// Rebuilds a circuit from the JSON gate list, validating every gate
    /// against the given register width.
    pub fn from_json(text: &str, n_qubits: usize) -> Result<Circuit> {
        let gates: Vec<Gate> = serde_json::from_str(text)?;
        let mut circuit = Circuit::new(n_qubits);
        for gate in gates {
            circuit.push(gate)?;
        }
        Ok(circuit)
    }

    /// QASM-2 text with angles substituted numerically; exact multiples
    /// of pi/2 print symbolically.
    pub fn to_qasm(&self) -> String {
        let mut out = String::new();
        out.push_str("OPENQASM 2.0;\n");
        out.push_str("include \"qelib1.inc\";\n");
        out.push_str(&format!("qreg q[{}];\n", self.n_qubits));
        for gate in &self.gates {
            let line = match *gate {
                Gate::H { qubit } => format!("h q[{qubit}];"),
                Gate::Sx { qubit } => format!("sx q[{qubit}];"),
                Gate::Rx { qubit, angle } => {
                    format!("rx({}) q[{qubit}];", qasm_angle(angle))
                }
                Gate::Rz { qubit, angle } => {
                    format!("rz({}) q[{qubit}];", qasm_angle(angle))
                }
                Gate::Cnot { control, target } => format!("cx q[{control}],q[{target}];"),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

fn qasm_angle(angle: f64) -> String {
    let half_pi = std::f64::consts::FRAC_PI_2;
    if angle == half_pi {
        "pi/2".to_string()
    } else if angle == -half_pi {
        "-pi/2".to_string()
    } else if angle == std::f64::consts::PI {
        "pi".to_string()
    } else if angle == -std::f64::consts::PI {
        "-pi".to_string()
    } else {
        format!("{angle}")
    }
}

/// A unit-coefficient Pauli axis with a rotation angle, denoting
/// `exp(-i (angle/2) axis)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliRotation {
    axis: PauliTerm,
    angle: f64,
}

impl PauliRotation {
    /// Builds a rotation about the string with the given letters
    /// (`letters[k]` on qubit k). At least one letter must be
    /// non-identity and the angle finite.
    pub fn new(letters: Vec<PauliLetter>, angle: f64) -> Result<Self> {
        if letters.iter().all(|&l| l == PauliLetter::I) {
            return Err(Error::IdentityAxis);
        }
        if !angle.is_finite() {
            return Err(Error::NonFiniteAngle);
        }
        Ok(PauliRotation {
            axis: PauliTerm::new(Complex64::new(1.0, 0.0), letters),
            angle,
        })
    }

    /// The axis string with coefficient exactly one.
    pub fn axis(&self) -> &PauliTerm {
        &self.axis
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }
}

/// Which end of the parity ladder receives the Rz.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetChoice {
    /// Rz on the lowest involved qubit; CNOTs run downward.
    Lowest,
    /// Rz on the highest involved qubit; CNOTs run upward.
    Highest,
}

/// Compiles `exp(-i (angle/2) axis)` with the default orientation:
/// ascending CNOT ladder, Rz on the highest non-identity qubit.
pub fn compile_pauli_rotation(rot: &PauliRotation) -> Result<Circuit> {
    cnot_direction_variant(rot, TargetChoice::Highest)
}

/// Same contract as [`compile_pauli_rotation`] with an explicit ladder
/// orientation; both variants implement the same unitary.
pub fn cnot_direction_variant(rot: &PauliRotation, target_choice: TargetChoice) -> Result<Circuit> {
    let n_qubits = rot.axis().n_qubits();
    let involved: Vec<(usize, PauliLetter)> = rot
        .axis()
        .letters
        .iter()
        .enumerate()
        .filter(|(_, &l)| l != PauliLetter::I)
        .map(|(q, &l)| (q, l))
        .collect();

    let mut basis_in: Vec<Gate> = Vec::new();
    for &(qubit, letter) in &involved {
        match letter {
            PauliLetter::X => basis_in.push(Gate::H { qubit }),
            PauliLetter::Y => basis_in.push(Gate::Rx {
                qubit,
                angle: std::f64::consts::FRAC_PI_2,
            }),
            PauliLetter::Z => {}
            PauliLetter::I => unreachable!("identity letters were filtered"),
        }
    }

    let qubits: Vec<usize> = involved.iter().map(|&(q, _)| q).collect();
    let mut ladder: Vec<Gate> = Vec::new();
    let rz_target = match target_choice {
        TargetChoice::Highest => {
            for pair in qubits.windows(2) {
                ladder.push(Gate::Cnot {
                    control: pair[0],
                    target: pair[1],
                });
            }
            *qubits.last().expect("axis has at least one letter")
        }
        TargetChoice::Lowest => {
            for pair in qubits.windows(2).rev() {
                ladder.push(Gate::Cnot {
                    control: pair[1],
                    target: pair[0],
                });
            }
            qubits[0]
        }
    };

    let mut circuit = Circuit::new(n_qubits);
    for gate in &basis_in {
        circuit.push(*gate)?;
    }
    for gate in &ladder {
        circuit.push(*gate)?;
    }
    circuit.push(Gate::Rz {
        qubit: rz_target,
        angle: rot.angle(),
    })?;
    for gate in ladder.iter().rev() {
        circuit.push(*gate)?;
    }
    for gate in basis_in.iter().rev() {
        let inverse = gate.inverse().expect("basis gates are invertible");
        circuit.push(inverse)?;
    }
    Ok(circuit)
}

/// Tolerance on the real part of generator coefficients.
const IMAGINARY_TOLERANCE: f64 = 1e-12;

/// Compiles `exp(theta * G)` for a commuting Pauli sum `G` whose
/// coefficients are purely imaginary (so `theta * G` is anti-Hermitian).
///
/// Each term `(i r) P` becomes one rotation `exp(-i (-2 r theta)/2 P)` =
/// `exp(i r theta P)`; because the terms commute the sequential product is
/// exact, not a Trotter approximation. Identity terms contribute only a
/// global phase and emit no gates. Non-commuting inputs are refused.
pub fn compile_generator_evolution(generator: &PauliSum, theta: f64) -> Result<Circuit> {
    compile_generator_evolution_with(generator, theta, TargetChoice::Highest)
}

/// [`compile_generator_evolution`] with an explicit ladder orientation for
/// every rotation.
pub fn compile_generator_evolution_with(
    generator: &PauliSum,
    theta: f64,
    target_choice: TargetChoice,
) -> Result<Circuit> {
    if !theta.is_finite() {
        return Err(Error::NonFiniteAngle);
    }
    for term in generator.terms() {
        if term.coefficient.re.abs() > IMAGINARY_TOLERANCE {
            return Err(Error::NonImaginaryCoefficient {
                letters: term.letters_string(),
                re: term.coefficient.re,
            });
        }
    }
    let terms = generator.terms();
    for (i, s) in terms.iter().enumerate() {
        for t in &terms[i + 1..] {
            if !s.commutes_with(t) {
                return Err(Error::NonCommutingTerms {
                    left: s.letters_string(),
                    right: t.letters_string(),
                });
            }
        }
    }

    let mut circuit = Circuit::new(generator.n_qubits());
    for term in terms {
        if term.is_identity() {
            continue;
        }
        let r = term.coefficient.im;
        let rotation = PauliRotation::new(term.letters.clone(), -2.0 * r * theta)?;
        circuit.extend(&cnot_direction_variant(&rotation, target_choice)?)?;
    }
    Ok(circuit)
}
