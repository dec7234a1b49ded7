//! Spin-orbital systems and allowed-excitation enumeration.
//!
//! Orbital ordering is explicit: a system is just the ordered list of
//! orbitals the caller constructs (the built-in H2 instance uses the
//! all-alpha-then-all-beta layout). Enumeration applies the two standard
//! selection rules: an excitation moves electrons from occupied to virtual
//! orbitals only, and spin is conserved — for doubles, the multiset of
//! spins is conserved, so same-spin pairs are emitted when the system
//! admits them.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fermion::{Excitation, ExcitationKind};

/// Electron spin label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spin {
    Alpha,
    Beta,
}

/// One single-electron state: spatial+spin label plus reference occupancy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinOrbital {
    pub index: usize,
    pub spin: Spin,
    pub occupied: bool,
}

/// An ordered list of spin orbitals with contiguous indices from zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitalSystem {
    orbitals: Vec<SpinOrbital>,
}

impl OrbitalSystem {
    /// Builds a system from `(spin, occupied)` pairs; indices are assigned
    /// in order starting at zero.
    pub fn new(orbitals: impl IntoIterator<Item = (Spin, bool)>) -> Self {
        OrbitalSystem {
            orbitals: orbitals
                .into_iter()
                .enumerate()
                .map(|(index, (spin, occupied))| SpinOrbital {
                    index,
                    spin,
                    occupied,
                })
                .collect(),
        }
    }

    /// Loads a system from the JSON description
    /// `{"orbitals": [{"spin": "alpha", "occupied": true}, ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct OrbitalDto {
            spin: Spin,
            occupied: bool,
        }
        #[derive(Deserialize)]
        struct SystemDto {
            orbitals: Vec<OrbitalDto>,
        }
        let dto: SystemDto = serde_json::from_str(text)?;
        Ok(OrbitalSystem::new(
            dto.orbitals.into_iter().map(|o| (o.spin, o.occupied)),
        ))
    }

    pub fn orbitals(&self) -> &[SpinOrbital] {
        &self.orbitals
    }

    /// Number of spin orbitals, also the qubit count after mapping.
    pub fn n_modes(&self) -> usize {
        self.orbitals.len()
    }

    /// Number of occupied orbitals in the reference state.
    pub fn electron_count(&self) -> usize {
        self.orbitals.iter().filter(|o| o.occupied).count()
    }

    fn spin(&self, mode: usize) -> Result<Spin> {
        self.orbitals
            .get(mode)
            .map(|o| o.spin)
            .ok_or(Error::ModeOutOfRange {
                mode,
                n_modes: self.n_modes(),
            })
    }

    fn occupied(&self, mode: usize) -> Result<bool> {
        self.orbitals
            .get(mode)
            .map(|o| o.occupied)
            .ok_or(Error::ModeOutOfRange {
                mode,
                n_modes: self.n_modes(),
            })
    }

    /// Checks an externally supplied excitation against this system:
    /// in-range modes, occupied sources, virtual targets, and a
    /// spin-conserving pairing between sources and targets.
    pub fn validate_excitation(&self, exc: &Excitation) -> Result<()> {
        for &m in exc.from_modes() {
            if !self.occupied(m)? {
                return Err(Error::Parse(format!("mode {m} is not occupied")));
            }
        }
        for &m in exc.to_modes() {
            if self.occupied(m)? {
                return Err(Error::Parse(format!("mode {m} is not virtual")));
            }
        }
        let matched = match exc.kind() {
            ExcitationKind::Single => {
                self.spin(exc.from_modes()[0])? == self.spin(exc.to_modes()[0])?
            }
            ExcitationKind::Double => {
                let f = [
                    self.spin(exc.from_modes()[0])?,
                    self.spin(exc.from_modes()[1])?,
                ];
                let t = [self.spin(exc.to_modes()[0])?, self.spin(exc.to_modes()[1])?];
                (f[0] == t[0] && f[1] == t[1]) || (f[0] == t[1] && f[1] == t[0])
            }
        };
        if !matched {
            return Err(Error::Parse("excitation does not conserve spin".into()));
        }
        Ok(())
    }
}

/// The hydrogen molecule in the minimal basis: four spin orbitals,
/// 0 (alpha, occupied), 1 (alpha, virtual), 2 (beta, occupied),
/// 3 (beta, virtual).
pub fn h2_sto3g() -> OrbitalSystem {
    OrbitalSystem::new([
        (Spin::Alpha, true),
        (Spin::Alpha, false),
        (Spin::Beta, true),
        (Spin::Beta, false),
    ])
}

/// All spin-conserving occupied-to-virtual single excitations,
/// ascending by `(from, to)`.
pub fn enumerate_singles(sys: &OrbitalSystem) -> Vec<Excitation> {
    let mut out = Vec::new();
    for i in sys.orbitals.iter().filter(|o| o.occupied) {
        for a in sys.orbitals.iter().filter(|o| !o.occupied) {
            if i.spin == a.spin {
                out.push(
                    Excitation::single(i.index, a.index)
                        .expect("occupied and virtual indices are distinct"),
                );
            }
        }
    }
    out
}

/// All double excitations from unordered occupied pairs to unordered
/// virtual pairs that conserve the spin multiset, ascending by
/// `(i, j, a, b)` with i<j and a<b.
pub fn enumerate_doubles(sys: &OrbitalSystem) -> Vec<Excitation> {
    let occ: Vec<&SpinOrbital> = sys.orbitals.iter().filter(|o| o.occupied).collect();
    let virt: Vec<&SpinOrbital> = sys.orbitals.iter().filter(|o| !o.occupied).collect();
    let mut out = Vec::new();
    for (x, i) in occ.iter().enumerate() {
        for j in &occ[x + 1..] {
            for (y, a) in virt.iter().enumerate() {
                for b in &virt[y + 1..] {
                    let straight = i.spin == a.spin && j.spin == b.spin;
                    let crossed = i.spin == b.spin && j.spin == a.spin;
                    if straight || crossed {
                        out.push(
                            Excitation::double((i.index, j.index), (a.index, b.index))
                                .expect("occupied and virtual pairs are disjoint"),
                        );
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h2_layout() {
        let sys = h2_sto3g();
        let occupied: Vec<usize> = sys
            .orbitals()
            .iter()
            .filter(|o| o.occupied)
            .map(|o| o.index)
            .collect();
        assert_eq!(occupied, vec![0, 2]);
        let spins: Vec<Spin> = sys.orbitals().iter().map(|o| o.spin).collect();
        assert_eq!(
            spins,
            vec![Spin::Alpha, Spin::Alpha, Spin::Beta, Spin::Beta]
        );
        assert_eq!(sys.electron_count(), 2);
        assert_eq!(sys.n_modes(), 4);
    }

    #[test]
    fn h2_singles() {
        let singles = enumerate_singles(&h2_sto3g());
        let rendered: Vec<String> = singles.iter().map(|e| e.to_string()).collect();
        assert_eq!(rendered, vec!["0->1", "2->3"]);
    }

    #[test]
    fn h2_doubles() {
        let doubles = enumerate_doubles(&h2_sto3g());
        let rendered: Vec<String> = doubles.iter().map(|e| e.to_string()).collect();
        assert_eq!(rendered, vec!["0,2->1,3"]);
    }

    #[test]
    fn all_occupied_has_no_excitations() {
        let sys = OrbitalSystem::new([(Spin::Alpha, true), (Spin::Beta, true)]);
        assert!(enumerate_singles(&sys).is_empty());
        assert!(enumerate_doubles(&sys).is_empty());
    }

    #[test]
    fn one_electron_has_no_doubles() {
        let sys = OrbitalSystem::new([(Spin::Alpha, true), (Spin::Alpha, false)]);
        assert!(enumerate_doubles(&sys).is_empty());
        assert_eq!(enumerate_singles(&sys).len(), 1);
    }

    /// Six-orbital system: 0,1,2 alpha; 3,4,5 beta; occupied {0,3}.
    fn six_orbital() -> OrbitalSystem {
        OrbitalSystem::new([
            (Spin::Alpha, true),
            (Spin::Alpha, false),
            (Spin::Alpha, false),
            (Spin::Beta, true),
            (Spin::Beta, false),
            (Spin::Beta, false),
        ])
    }

    /// Brute-force filter over all (occupied, virtual) pairs, independent
    /// of the enumeration path.
    fn brute_force_singles(sys: &OrbitalSystem) -> Vec<(usize, usize)> {
        let n = sys.n_modes();
        let mut out = Vec::new();
        for i in 0..n {
            for a in 0..n {
                let oi = sys.orbitals()[i];
                let oa = sys.orbitals()[a];
                if oi.occupied && !oa.occupied && oi.spin == oa.spin {
                    out.push((i, a));
                }
            }
        }
        out
    }

    #[test]
    fn six_orbital_singles_match_brute_force() {
        let sys = six_orbital();
        let singles: Vec<(usize, usize)> = enumerate_singles(&sys)
            .iter()
            .map(|e| (e.from_modes()[0], e.to_modes()[0]))
            .collect();
        assert_eq!(singles, brute_force_singles(&sys));
        assert_eq!(singles, vec![(0, 1), (0, 2), (3, 4), (3, 5)]);
    }

    /// Brute-force filter over all pairs with the spin-multiset rule.
    fn brute_force_doubles(sys: &OrbitalSystem) -> Vec<(usize, usize, usize, usize)> {
        let n = sys.n_modes();
        let orb = sys.orbitals();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for a in 0..n {
                    for b in a + 1..n {
                        let occ_ok = orb[i].occupied
                            && orb[j].occupied
                            && !orb[a].occupied
                            && !orb[b].occupied;
                        let mut from = [orb[i].spin, orb[j].spin];
                        let mut to = [orb[a].spin, orb[b].spin];
                        from.sort_by_key(|s| *s == Spin::Beta);
                        to.sort_by_key(|s| *s == Spin::Beta);
                        if occ_ok && from == to {
                            out.push((i, j, a, b));
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn six_orbital_doubles_match_brute_force() {
        let sys = six_orbital();
        let doubles: Vec<(usize, usize, usize, usize)> = enumerate_doubles(&sys)
            .iter()
            .map(|e| {
                (
                    e.from_modes()[0],
                    e.from_modes()[1],
                    e.to_modes()[0],
                    e.to_modes()[1],
                )
            })
            .collect();
        assert_eq!(doubles, brute_force_doubles(&sys));
        assert_eq!(
            doubles,
            vec![(0, 3, 1, 4), (0, 3, 1, 5), (0, 3, 2, 4), (0, 3, 2, 5)]
        );
    }

    #[test]
    fn enumerated_excitations_validate() {
        for sys in [h2_sto3g(), six_orbital()] {
            for exc in enumerate_singles(&sys)
                .iter()
                .chain(enumerate_doubles(&sys).iter())
            {
                sys.validate_excitation(exc).unwrap();
            }
        }
    }

    #[test]
    fn validation_rejects_spin_flip_and_wrong_occupancy() {
        let sys = h2_sto3g();
        // 0 (alpha) -> 3 (beta): spin flip
        let exc = Excitation::single(0, 3).unwrap();
        assert!(sys.validate_excitation(&exc).is_err());
        // 1 -> 3: source not occupied
        let exc = Excitation::single(1, 3).unwrap();
        assert!(sys.validate_excitation(&exc).is_err());
        // 0 -> 2: target already occupied
        let exc = Excitation::single(0, 2).unwrap();
        assert!(sys.validate_excitation(&exc).is_err());
    }

    #[test]
    fn system_from_json() {
        let text = r#"{"orbitals": [
            {"spin": "alpha", "occupied": true},
            {"spin": "alpha", "occupied": false},
            {"spin": "beta", "occupied": true},
            {"spin": "beta", "occupied": false}
        ]}"#;
        let sys = OrbitalSystem::from_json(text).unwrap();
        assert_eq!(sys, h2_sto3g());
        assert!(OrbitalSystem::from_json("{\"orbitals\": [{\"spin\": \"up\"}]}").is_err());
    }
}
