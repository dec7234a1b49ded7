//! Second-quantized fermionic operators.
//!
//! A [`FermionOperator`] is a complex-weighted sum of ordered ladder-operator
//! products on indexed spin orbitals. Products are kept exactly as written:
//! the leftmost ladder operator acts last, matching standard operator
//! notation, and no normal ordering is ever applied. Equality of two
//! operators as linear maps is decided by the dense oracle, not symbolically.
//!
//! The module also holds [`Excitation`], the validated single/double orbital
//! transition that seeds the anti-Hermitian generators of the ansatz.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Coefficients with modulus below this are dropped during canonicalization.
pub(crate) const DROP_TOLERANCE: f64 = 1e-12;

/// Whether a ladder operator creates or annihilates a particle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LadderKind {
    Create,
    Annihilate,
}

impl LadderKind {
    /// The conjugate kind: creation and annihilation swap under dagger.
    pub fn conjugate(self) -> Self {
        match self {
            LadderKind::Create => LadderKind::Annihilate,
            LadderKind::Annihilate => LadderKind::Create,
        }
    }
}

/// A single creation or annihilation operator on one spin orbital.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LadderOp {
    pub mode: usize,
    pub kind: LadderKind,
}

impl LadderOp {
    pub fn create(mode: usize) -> Self {
        LadderOp {
            mode,
            kind: LadderKind::Create,
        }
    }

    pub fn annihilate(mode: usize) -> Self {
        LadderOp {
            mode,
            kind: LadderKind::Annihilate,
        }
    }
}

impl fmt::Display for LadderOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LadderKind::Create => write!(f, "{}^", self.mode),
            LadderKind::Annihilate => write!(f, "{}", self.mode),
        }
    }
}

/// One summand: a complex coefficient times an ordered ladder product.
///
/// An empty `ops` sequence denotes the identity scaled by the coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct FermionTerm {
    pub coefficient: Complex64,
    pub ops: Vec<LadderOp>,
}

impl FermionTerm {
    pub fn new(coefficient: Complex64, ops: Vec<LadderOp>) -> Self {
        FermionTerm { coefficient, ops }
    }

    /// The identity operator scaled by `coefficient`.
    pub fn identity(coefficient: Complex64) -> Self {
        FermionTerm {
            coefficient,
            ops: Vec::new(),
        }
    }

    /// Hermitian conjugate: conjugated coefficient, reversed ops with
    /// create and annihilate swapped.
    pub fn conjugate(&self) -> Self {
        FermionTerm {
            coefficient: self.coefficient.conj(),
            ops: self
                .ops
                .iter()
                .rev()
                .map(|op| LadderOp {
                    mode: op.mode,
                    kind: op.kind.conjugate(),
                })
                .collect(),
        }
    }

    fn max_mode(&self) -> Option<usize> {
        self.ops.iter().map(|op| op.mode).max()
    }
}

/// A complex-weighted sum of ladder-operator products on `n_modes` orbitals.
///
/// Terms are kept canonical: identical ops sequences are merged, negligible
/// coefficients dropped, and the sum is sorted deterministically.
#[derive(Debug, Clone, PartialEq)]
pub struct FermionOperator {
    n_modes: usize,
    terms: Vec<FermionTerm>,
}

impl FermionOperator {
    /// The zero operator on `n_modes` orbitals.
    pub fn zero(n_modes: usize) -> Self {
        FermionOperator {
            n_modes,
            terms: Vec::new(),
        }
    }

    /// The identity operator scaled by `coefficient`.
    pub fn identity(n_modes: usize, coefficient: Complex64) -> Self {
        Self::from_terms(n_modes, vec![FermionTerm::identity(coefficient)])
            .expect("identity term has no modes")
    }

    /// Builds an operator from raw terms, validating mode bounds and
    /// canonicalizing the sum.
    pub fn from_terms(n_modes: usize, terms: Vec<FermionTerm>) -> Result<Self> {
        for term in &terms {
            if let Some(mode) = term.max_mode() {
                if mode >= n_modes {
                    return Err(Error::ModeOutOfRange { mode, n_modes });
                }
            }
        }
        let mut op = FermionOperator { n_modes, terms };
        op.canonicalize();
        Ok(op)
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn terms(&self) -> &[FermionTerm] {
        &self.terms
    }

    /// Hermitian conjugate, applied term by term.
    pub fn conjugate(&self) -> Self {
        let mut op = FermionOperator {
            n_modes: self.n_modes,
            terms: self.terms.iter().map(FermionTerm::conjugate).collect(),
        };
        op.canonicalize();
        op
    }

    /// Sum of two operators on the same number of modes.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n_modes != other.n_modes {
            return Err(Error::DimensionMismatch {
                left: self.n_modes,
                right: other.n_modes,
            });
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        FermionOperator::from_terms(self.n_modes, terms)
    }

    /// Difference of two operators on the same number of modes.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// The operator with every coefficient multiplied by `factor`.
    pub fn scale(&self, factor: Complex64) -> Self {
        let mut op = FermionOperator {
            n_modes: self.n_modes,
            terms: self
                .terms
                .iter()
                .map(|t| FermionTerm::new(t.coefficient * factor, t.ops.clone()))
                .collect(),
        };
        op.canonicalize();
        op
    }

    /// Merges terms with identical ops sequences, drops negligible
    /// coefficients, and sorts terms by their ops sequence.
    fn canonicalize(&mut self) {
        self.terms.sort_by(|a, b| a.ops.cmp(&b.ops));
        let mut merged: Vec<FermionTerm> = Vec::with_capacity(self.terms.len());
        for term in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last) if last.ops == term.ops => last.coefficient += term.coefficient,
                _ => merged.push(term),
            }
        }
        merged.retain(|t| t.coefficient.norm() >= DROP_TOLERANCE);
        self.terms = merged;
    }
}

impl fmt::Display for FermionOperator {
    /// Text notation accepted back by [`parse_operator`], e.g.
    /// `(0.25,0)* 3^ 1^ 2 0 + 1^ 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "(0,0)*");
        }
        let one = Complex64::new(1.0, 0.0);
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let need_coeff = term.coefficient != one || term.ops.is_empty();
            if need_coeff {
                write!(f, "({},{})*", term.coefficient.re, term.coefficient.im)?;
                if !term.ops.is_empty() {
                    write!(f, " ")?;
                }
            }
            for (j, op) in term.ops.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{op}")?;
            }
        }
        Ok(())
    }
}

/// A spin- and occupancy-valid orbital transition with a symbolic amplitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcitationKind {
    Single,
    Double,
}

/// A single or double excitation between disjoint orbital sets.
///
/// `from_modes` and `to_modes` are stored sorted ascending. Structural
/// validity (disjointness, arity) is enforced here; spin and occupancy
/// rules need an orbital system and are checked by the orbitals module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Excitation {
    kind: ExcitationKind,
    from_modes: Vec<usize>,
    to_modes: Vec<usize>,
    parameter_label: String,
}

impl Excitation {
    /// A single excitation `from -> to`.
    pub fn single(from: usize, to: usize) -> Result<Self> {
        if from == to {
            return Err(Error::ExcitationOverlap);
        }
        Ok(Excitation {
            kind: ExcitationKind::Single,
            from_modes: vec![from],
            to_modes: vec![to],
            parameter_label: format!("t[{from}->{to}]"),
        })
    }

    /// A double excitation `{i,j} -> {a,b}`.
    pub fn double(from: (usize, usize), to: (usize, usize)) -> Result<Self> {
        let mut from_modes = vec![from.0, from.1];
        let mut to_modes = vec![to.0, to.1];
        from_modes.sort_unstable();
        to_modes.sort_unstable();
        let distinct = from_modes[0] != from_modes[1]
            && to_modes[0] != to_modes[1]
            && !from_modes.iter().any(|m| to_modes.contains(m));
        if !distinct {
            return Err(Error::ExcitationOverlap);
        }
        let parameter_label = format!(
            "t[{},{}->{},{}]",
            from_modes[0], from_modes[1], to_modes[0], to_modes[1]
        );
        Ok(Excitation {
            kind: ExcitationKind::Double,
            from_modes,
            to_modes,
            parameter_label,
        })
    }

    pub fn kind(&self) -> ExcitationKind {
        self.kind
    }

    /// Occupied orbital indices, ascending.
    pub fn from_modes(&self) -> &[usize] {
        &self.from_modes
    }

    /// Virtual orbital indices, ascending.
    pub fn to_modes(&self) -> &[usize] {
        &self.to_modes
    }

    /// Identifier for the amplitude parameter carried by this excitation.
    pub fn parameter_label(&self) -> &str {
        &self.parameter_label
    }

    pub fn max_mode(&self) -> usize {
        *self
            .from_modes
            .iter()
            .chain(self.to_modes.iter())
            .max()
            .expect("excitation has at least one mode")
    }
}

impl fmt::Display for Excitation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ExcitationKind::Single => {
                write!(f, "{}->{}", self.from_modes[0], self.to_modes[0])
            }
            ExcitationKind::Double => write!(
                f,
                "{},{}->{},{}",
                self.from_modes[0], self.from_modes[1], self.to_modes[0], self.to_modes[1]
            ),
        }
    }
}

/// The excitation as a unit-coefficient ladder product.
///
/// Single `i -> a` gives `a_a^ a_i`; double `{i,j} -> {a,b}` (with i<j, a<b)
/// gives `a_b^ a_a^ a_j a_i`. The amplitude parameter is carried externally.
pub fn excitation_to_operator(exc: &Excitation, n_modes: usize) -> Result<FermionOperator> {
    let ops = match exc.kind {
        ExcitationKind::Single => vec![
            LadderOp::create(exc.to_modes[0]),
            LadderOp::annihilate(exc.from_modes[0]),
        ],
        ExcitationKind::Double => vec![
            LadderOp::create(exc.to_modes[1]),
            LadderOp::create(exc.to_modes[0]),
            LadderOp::annihilate(exc.from_modes[1]),
            LadderOp::annihilate(exc.from_modes[0]),
        ],
    };
    FermionOperator::from_terms(
        n_modes,
        vec![FermionTerm::new(Complex64::new(1.0, 0.0), ops)],
    )
}

/// The anti-Hermitian generator `T - T^dag` for one excitation.
///
/// The result `G` satisfies `G.conjugate() == G.scale(-1)` by construction.
pub fn anti_hermitian_generator(exc: &Excitation, n_modes: usize) -> Result<FermionOperator> {
    let t = excitation_to_operator(exc, n_modes)?;
    t.sub(&t.conjugate())
}

/// Parses the whitespace-and-caret operator notation.
///
/// Grammar: terms joined by `+` at the top level; each term is an optional
/// `(re,im)*` coefficient followed by whitespace-separated mode tokens, with
/// a trailing `^` marking creation. `3^ 1^ 2 0` reads as a_3^ a_1^ a_2 a_0.
/// An empty string is the identity with coefficient one.
pub fn parse_operator(text: &str, n_modes: usize) -> Result<FermionOperator> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(FermionOperator::identity(n_modes, Complex64::new(1.0, 0.0)));
    }
    let mut terms = Vec::new();
    for segment in split_top_level_plus(text)? {
        terms.push(parse_term(segment.trim())?);
    }
    FermionOperator::from_terms(n_modes, terms)
}

/// Splits on `+` outside parentheses, so `(0,+1)*` coefficients stay whole.
fn split_top_level_plus(text: &str) -> Result<Vec<&str>> {
    let mut segments = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse("unbalanced ')'".into()))?;
            }
            '+' if depth == 0 => {
                segments.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced '('".into()));
    }
    segments.push(&text[start..]);
    Ok(segments)
}

fn parse_term(segment: &str) -> Result<FermionTerm> {
    if segment.is_empty() {
        return Err(Error::Parse("empty term between '+' separators".into()));
    }
    let (coefficient, rest) = if let Some(body) = segment.strip_prefix('(') {
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse("missing ')' in coefficient".into()))?;
        let coeff = parse_coefficient(&body[..close])?;
        let after = body[close + 1..].trim_start();
        let after = after
            .strip_prefix('*')
            .ok_or_else(|| Error::Parse("expected '*' after coefficient".into()))?;
        (coeff, after)
    } else {
        (Complex64::new(1.0, 0.0), segment)
    };
    let mut ops = Vec::new();
    for token in rest.split_whitespace() {
        ops.push(parse_ladder_token(token)?);
    }
    Ok(FermionTerm::new(coefficient, ops))
}

fn parse_coefficient(body: &str) -> Result<Complex64> {
    let (re, im) = body
        .split_once(',')
        .ok_or_else(|| Error::Parse("coefficient must be '(re,im)'".into()))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad real part '{}'", re.trim())))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad imaginary part '{}'", im.trim())))?;
    Ok(Complex64::new(re, im))
}

fn parse_ladder_token(token: &str) -> Result<LadderOp> {
    let (digits, kind) = match token.strip_suffix('^') {
        Some(digits) => (digits, LadderKind::Create),
        None => (token, LadderKind::Annihilate),
    };
    let mode: usize = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad mode token '{token}'")))?;
    Ok(LadderOp { mode, kind })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn conjugate_single_term() {
        // a_1^ a_0 -> a_0^ a_1
        let op = FermionOperator::from_terms(
            2,
            vec![FermionTerm::new(
                c(1.0, 0.0),
                vec![LadderOp::create(1), LadderOp::annihilate(0)],
            )],
        )
        .unwrap();
        let conj = op.conjugate();
        assert_eq!(conj.terms().len(), 1);
        assert_eq!(
            conj.terms()[0].ops,
            vec![LadderOp::create(0), LadderOp::annihilate(1)]
        );
        assert_eq!(conj.terms()[0].coefficient, c(1.0, 0.0));
    }

    #[test]
    fn conjugate_identity_conjugates_coefficient() {
        let op = FermionOperator::identity(3, c(0.0, 1.0));
        let conj = op.conjugate();
        assert_eq!(conj.terms()[0].coefficient, c(0.0, -1.0));
        assert!(conj.terms()[0].ops.is_empty());
    }

    #[test]
    fn conjugate_double_term() {
        // a_3^ a_1^ a_2 a_0 -> a_0^ a_2^ a_1 a_3
        let op = parse_operator("3^ 1^ 2 0", 4).unwrap();
        let conj = op.conjugate();
        assert_eq!(
            conj.terms()[0].ops,
            vec![
                LadderOp::create(0),
                LadderOp::create(2),
                LadderOp::annihilate(1),
                LadderOp::annihilate(3),
            ]
        );
    }

    #[test]
    fn excitation_operator_examples() {
        let single = Excitation::single(0, 1).unwrap();
        let op = excitation_to_operator(&single, 4).unwrap();
        assert_eq!(
            op.terms()[0].ops,
            vec![LadderOp::create(1), LadderOp::annihilate(0)]
        );

        let second = Excitation::single(2, 3).unwrap();
        let op = excitation_to_operator(&second, 4).unwrap();
        assert_eq!(
            op.terms()[0].ops,
            vec![LadderOp::create(3), LadderOp::annihilate(2)]
        );

        let double = Excitation::double((0, 2), (1, 3)).unwrap();
        let op = excitation_to_operator(&double, 4).unwrap();
        assert_eq!(
            op.terms()[0].ops,
            vec![
                LadderOp::create(3),
                LadderOp::create(1),
                LadderOp::annihilate(2),
                LadderOp::annihilate(0),
            ]
        );
        assert_eq!(op.terms()[0].coefficient, c(1.0, 0.0));
    }

    #[test]
    fn excitation_rejects_overlap() {
        assert!(Excitation::single(1, 1).is_err());
        assert!(Excitation::double((0, 1), (1, 2)).is_err());
        assert!(Excitation::double((0, 0), (1, 2)).is_err());
    }

    #[test]
    fn generator_is_anti_hermitian_by_construction() {
        let exc = Excitation::single(0, 1).unwrap();
        let gen = anti_hermitian_generator(&exc, 4).unwrap();
        assert_eq!(gen.terms().len(), 2);
        assert_eq!(gen.conjugate(), gen.scale(c(-1.0, 0.0)));

        let exc = Excitation::double((0, 2), (1, 3)).unwrap();
        let gen = anti_hermitian_generator(&exc, 4).unwrap();
        assert_eq!(gen.conjugate(), gen.scale(c(-1.0, 0.0)));
    }

    #[test]
    fn generator_single_pairing() {
        // a_1^ a_0 - a_0^ a_1
        let exc = Excitation::single(0, 1).unwrap();
        let gen = anti_hermitian_generator(&exc, 2).unwrap();
        let plus = FermionTerm::new(
            c(1.0, 0.0),
            vec![LadderOp::create(1), LadderOp::annihilate(0)],
        );
        let minus = FermionTerm::new(
            c(-1.0, 0.0),
            vec![LadderOp::create(0), LadderOp::annihilate(1)],
        );
        assert!(gen.terms().contains(&plus));
        assert!(gen.terms().contains(&minus));
    }

    #[test]
    fn canonicalize_merges_and_drops() {
        let ops = vec![LadderOp::create(1), LadderOp::annihilate(0)];
        let op = FermionOperator::from_terms(
            2,
            vec![
                FermionTerm::new(c(0.5, 0.0), ops.clone()),
                FermionTerm::new(c(0.5, 0.0), ops.clone()),
                FermionTerm::new(c(1.0, 0.0), vec![LadderOp::create(0)]),
                FermionTerm::new(c(-1.0, 0.0), vec![LadderOp::create(0)]),
            ],
        )
        .unwrap();
        assert_eq!(op.terms().len(), 1);
        assert_eq!(op.terms()[0].coefficient, c(1.0, 0.0));
        assert_eq!(op.terms()[0].ops, ops);
    }

    #[test]
    fn mode_bounds_enforced() {
        let err = FermionOperator::from_terms(
            2,
            vec![FermionTerm::new(c(1.0, 0.0), vec![LadderOp::create(2)])],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::ModeOutOfRange {
                mode: 2,
                n_modes: 2
            }
        );
    }

    #[test]
    fn parse_round_trip() {
        let op = parse_operator("(0.25,-0.5)* 3^ 1^ 2 0 + 1^ 0", 4).unwrap();
        assert_eq!(op.terms().len(), 2);
        let reparsed = parse_operator(&op.to_string(), 4).unwrap();
        assert_eq!(op, reparsed);
    }

    #[test]
    fn parse_empty_is_identity() {
        let op = parse_operator("", 2).unwrap();
        assert_eq!(op.terms().len(), 1);
        assert!(op.terms()[0].ops.is_empty());
        assert_eq!(op.terms()[0].coefficient, c(1.0, 0.0));
    }

    #[test]
    fn parse_plus_inside_coefficient() {
        let op = parse_operator("(0,+1)* 1^ 0 + (-1,0)* 0^ 1", 2).unwrap();
        assert_eq!(op.terms().len(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_operator("1^ +", 4), Err(Error::Parse(_))));
        assert!(matches!(
            parse_operator("(1,2 * 0", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_operator("x^", 4), Err(Error::Parse(_))));
        assert!(matches!(parse_operator("(1)* 0", 4), Err(Error::Parse(_))));
        assert!(matches!(
            parse_operator("5^", 4),
            Err(Error::ModeOutOfRange {
                mode: 5,
                n_modes: 4
            })
        ));
    }
}
