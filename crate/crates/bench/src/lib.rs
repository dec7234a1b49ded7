//! Shared input builders for the benchmark targets.

use fqc::fermion::{anti_hermitian_generator, parse_operator, Excitation, FermionOperator};
use fqc::pauli::{jw_map, PauliSum};

/// The written double-excitation product on four modes.
pub fn double_excitation_operator() -> FermionOperator {
    parse_operator("3^ 1^ 2 0", 4).expect("modes in range")
}

/// The anti-Hermitian H2 double-excitation generator.
pub fn double_excitation_generator() -> FermionOperator {
    let exc = Excitation::double((0, 2), (1, 3)).expect("valid excitation");
    anti_hermitian_generator(&exc, 4).expect("modes in range")
}

/// Its Jordan-Wigner image: eight strings with imaginary weights.
pub fn double_excitation_image() -> PauliSum {
    jw_map(&double_excitation_generator(), 4).expect("modes in range")
}

/// A long-range hop on `n` modes, dragging a Z string across the register.
pub fn long_range_hop(n: usize) -> FermionOperator {
    parse_operator(&format!("{}^ 0 + (-1,0)* 0^ {}", n - 1, n - 1), n).expect("modes in range")
}
