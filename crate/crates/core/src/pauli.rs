//! Pauli-string algebra and the Jordan-Wigner transform.
//!
//! A [`PauliTerm`] is a complex coefficient times one letter of {I, X, Y, Z}
//! per qubit; a [`PauliSum`] keeps its terms in collected canonical form.
//! Phases from letter products are tracked exactly: every single-letter
//! product is one of {1, i, -1, -i} times a letter, so coefficients stay
//! exact whenever the inputs are.
//!
//! Display convention: qubit 0 is the rightmost letter, so the term
//! X3 X2 I1 I0 prints as `XXII`.
//!
//! The Jordan-Wigner images are
//!
//! ```text
//! a_p   = 1/2 (X_p + i Y_p) Z_{p-1} ... Z_0
//! a_p^  = 1/2 (X_p - i Y_p) Z_{p-1} ... Z_0
//! ```
//!
//! and [`jw_map`] applies them termwise, multiplying ladder images in the
//! written operator order (leftmost acts last).

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fermion::{FermionOperator, LadderKind, DROP_TOLERANCE};

/// One single-qubit Pauli letter. The derived order (I < X < Y < Z) is the
/// canonical sort order for strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub fn to_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }

    pub fn from_char(ch: char) -> Result<Self> {
        match ch {
            'I' => Ok(PauliLetter::I),
            'X' => Ok(PauliLetter::X),
            'Y' => Ok(PauliLetter::Y),
            'Z' => Ok(PauliLetter::Z),
            other => Err(Error::Parse(format!("invalid Pauli letter '{other}'"))),
        }
    }
}

/// Product of two single-qubit Pauli letters as `phase * letter`.
///
/// The phase is always one of {1, i, -1, -i}, exactly representable.
pub fn single_pauli_product(a: PauliLetter, b: PauliLetter) -> (Complex64, PauliLetter) {
    use PauliLetter::*;
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match (a, b) {
        (I, p) | (p, I) => (one, p),
        (X, X) | (Y, Y) | (Z, Z) => (one, I),
        (X, Y) => (i, Z),
        (Y, X) => (-i, Z),
        (Y, Z) => (i, X),
        (Z, Y) => (-i, X),
        (Z, X) => (i, Y),
        (X, Z) => (-i, Y),
    }
}

/// A complex coefficient with one Pauli letter per qubit
/// (`letters[k]` acts on qubit k).
#[derive(Debug, Clone, PartialEq)]
pub struct PauliTerm {
    pub coefficient: Complex64,
    pub letters: Vec<PauliLetter>,
}

impl PauliTerm {
    pub fn new(coefficient: Complex64, letters: Vec<PauliLetter>) -> Self {
        PauliTerm {
            coefficient,
            letters,
        }
    }

    /// The identity string on `n` qubits scaled by `coefficient`.
    pub fn identity(n_qubits: usize, coefficient: Complex64) -> Self {
        PauliTerm {
            coefficient,
            letters: vec![PauliLetter::I; n_qubits],
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.letters.len()
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.letters
            .iter()
            .filter(|&&l| l != PauliLetter::I)
            .count()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&l| l == PauliLetter::I)
    }

    /// Letters in display order, qubit 0 rightmost.
    pub fn letters_string(&self) -> String {
        self.letters.iter().rev().map(|l| l.to_char()).collect()
    }

    /// Parses a display-order letter string (`"XYII"` puts X on the top
    /// qubit and I on qubit 0).
    pub fn from_letters_str(coefficient: Complex64, s: &str) -> Result<Self> {
        let mut letters = s
            .chars()
            .map(PauliLetter::from_char)
            .collect::<Result<Vec<_>>>()?;
        letters.reverse();
        Ok(PauliTerm {
            coefficient,
            letters,
        })
    }

    /// Two strings commute iff they differ on an even number of qubits
    /// where both are non-identity.
    pub fn commutes_with(&self, other: &PauliTerm) -> bool {
        let clashes = self
            .letters
            .iter()
            .zip(other.letters.iter())
            .filter(|(a, b)| **a != PauliLetter::I && **b != PauliLetter::I && a != b)
            .count();
        clashes % 2 == 0
    }
}

/// Qubit-wise product `s * t` with the accumulated phase folded into the
/// coefficient.
pub fn term_multiply(s: &PauliTerm, t: &PauliTerm) -> Result<PauliTerm> {
    if s.n_qubits() != t.n_qubits() {
        return Err(Error::DimensionMismatch {
            left: s.n_qubits(),
            right: t.n_qubits(),
        });
    }
    let mut coefficient = s.coefficient * t.coefficient;
    let letters = s
        .letters
        .iter()
        .zip(t.letters.iter())
        .map(|(&a, &b)| {
            let (phase, letter) = single_pauli_product(a, b);
            coefficient *= phase;
            letter
        })
        .collect();
    Ok(PauliTerm {
        coefficient,
        letters,
    })
}

/// A canonical complex-weighted sum of Pauli strings on a fixed register.
///
/// Canonical form: unique letter patterns, coefficients below the drop
/// tolerance removed, terms sorted lexicographically on the display string.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    n_qubits: usize,
    terms: Vec<PauliTerm>,
}

impl PauliSum {
    /// The zero sum on `n_qubits`.
    pub fn zero(n_qubits: usize) -> Self {
        PauliSum {
            n_qubits,
            terms: Vec::new(),
        }
    }

    /// The identity string scaled by `coefficient`.
    pub fn identity(n_qubits: usize, coefficient: Complex64) -> Self {
        PauliSum {
            n_qubits,
            terms: vec![PauliTerm::identity(n_qubits, coefficient)],
        }
    }

    /// Builds a canonical sum, validating that every term matches the
    /// register width.
    pub fn from_terms(n_qubits: usize, terms: Vec<PauliTerm>) -> Result<Self> {
        for term in &terms {
            if term.n_qubits() != n_qubits {
                return Err(Error::DimensionMismatch {
                    left: n_qubits,
                    right: term.n_qubits(),
                });
            }
        }
        let mut sum = PauliSum { n_qubits, terms };
        sum.canonicalize();
        Ok(sum)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[PauliTerm] {
        &self.terms
    }

    pub fn add(&self, other: &PauliSum) -> Result<PauliSum> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        PauliSum::from_terms(self.n_qubits, terms)
    }

    pub fn scale(&self, factor: Complex64) -> PauliSum {
        let mut sum = PauliSum {
            n_qubits: self.n_qubits,
            terms: self
                .terms
                .iter()
                .map(|t| PauliTerm::new(t.coefficient * factor, t.letters.clone()))
                .collect(),
        };
        sum.canonicalize();
        sum
    }

    /// Collects like terms, drops negligible coefficients, sorts.
    fn canonicalize(&mut self) {
        let mut collected: BTreeMap<Vec<PauliLetter>, Complex64> = BTreeMap::new();
        for term in self.terms.drain(..) {
            let key: Vec<PauliLetter> = term.letters.iter().rev().cloned().collect();
            *collected.entry(key).or_insert(Complex64::new(0.0, 0.0)) += term.coefficient;
        }
        self.terms = collected
            .into_iter()
            .filter(|(_, c)| c.norm() >= DROP_TOLERANCE)
            .map(|(mut key, coefficient)| {
                key.reverse();
                PauliTerm::new(coefficient, key)
            })
            .collect();
    }

    /// Text format: one term per line, `<re><sign><im>i <LETTERS>` at four
    /// decimal places, qubit 0 rightmost.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for term in &self.terms {
            out.push_str(&format_complex(term.coefficient));
            out.push(' ');
            out.push_str(&term.letters_string());
            out.push('\n');
        }
        out
    }

    /// JSON format: `{"n_qubits": n, "terms": [{"coeff": [re, im],
    /// "letters": "XYII"}, ...]}` at full precision.
    pub fn to_json(&self) -> String {
        let dto = PauliSumDto {
            n_qubits: self.n_qubits,
            terms: self
                .terms
                .iter()
                .map(|t| PauliTermDto {
                    coeff: [t.coefficient.re, t.coefficient.im],
                    letters: t.letters_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&dto).expect("pauli sum serializes")
    }

    pub fn from_json(text: &str) -> Result<PauliSum> {
        let dto: PauliSumDto = serde_json::from_str(text)?;
        let terms = dto
            .terms
            .iter()
            .map(|t| {
                PauliTerm::from_letters_str(Complex64::new(t.coeff[0], t.coeff[1]), &t.letters)
            })
            .collect::<Result<Vec<_>>>()?;
        PauliSum::from_terms(dto.n_qubits, terms)
    }
}

#[derive(Serialize, Deserialize)]
struct PauliTermDto {
    coeff: [f64; 2],
    letters: String,
}

#[derive(Serialize, Deserialize)]
struct PauliSumDto {
    n_qubits: usize,
    terms: Vec<PauliTermDto>,
}

impl fmt::Display for PauliSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Renders a coefficient as `<re><sign><im>i` at four decimal places.
pub fn format_complex(c: Complex64) -> String {
    format!("{:+.4}{:+.4}i", c.re, c.im)
}

/// Distributed product of two sums, canonicalized.
pub fn sum_multiply(a: &PauliSum, b: &PauliSum) -> Result<PauliSum> {
    if a.n_qubits() != b.n_qubits() {
        return Err(Error::DimensionMismatch {
            left: a.n_qubits(),
            right: b.n_qubits(),
        });
    }
    let mut terms = Vec::with_capacity(a.terms().len() * b.terms().len());
    for s in a.terms() {
        for t in b.terms() {
            terms.push(term_multiply(s, t)?);
        }
    }
    PauliSum::from_terms(a.n_qubits(), terms)
}

/// Jordan-Wigner image of one ladder operator: `1/2 (X_p ± i Y_p)` with a
/// Z string on every qubit below p; `+i` for annihilation, `-i` for
/// creation.
pub fn jw_ladder(p: usize, kind: LadderKind, n_qubits: usize) -> Result<PauliSum> {
    if p >= n_qubits {
        return Err(Error::ModeOutOfRange {
            mode: p,
            n_modes: n_qubits,
        });
    }
    let mut x_letters = vec![PauliLetter::I; n_qubits];
    let mut y_letters = vec![PauliLetter::I; n_qubits];
    for j in 0..p {
        x_letters[j] = PauliLetter::Z;
        y_letters[j] = PauliLetter::Z;
    }
    x_letters[p] = PauliLetter::X;
    y_letters[p] = PauliLetter::Y;
    let y_coeff = match kind {
        LadderKind::Annihilate => Complex64::new(0.0, 0.5),
        LadderKind::Create => Complex64::new(0.0, -0.5),
    };
    PauliSum::from_terms(
        n_qubits,
        vec![
            PauliTerm::new(Complex64::new(0.5, 0.0), x_letters),
            PauliTerm::new(y_coeff, y_letters),
        ],
    )
}

/// Jordan-Wigner transform of a whole fermionic operator on `n_qubits`.
///
/// Each term maps to the coefficient times the ordered product of its
/// ladder images (leftmost factor leftmost in the product); the result is
/// canonicalized.
pub fn jw_map(op: &FermionOperator, n_qubits: usize) -> Result<PauliSum> {
    let mut result = PauliSum::zero(n_qubits);
    for term in op.terms() {
        let mut image = PauliSum::identity(n_qubits, term.coefficient);
        for ladder in &term.ops {
            let factor = jw_ladder(ladder.mode, ladder.kind, n_qubits)?;
            image = sum_multiply(&image, &factor)?;
        }
        result = result.add(&image)?;
    }
    Ok(result)
}
