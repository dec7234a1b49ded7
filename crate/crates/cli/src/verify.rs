//! The `verify` subcommand: dense-matrix cross-checks over the whole
//! pipeline, printing the max deviation of every block.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fqc::fermion::{
    anti_hermitian_generator, parse_operator, Excitation, FermionOperator, FermionTerm, LadderKind,
    LadderOp,
};
use fqc::gates::{controlled, gate_matrix, phase_relation_check};
use fqc::oracle::{
    equal_up_to_global_phase, expm_antihermitian, matrix_of_circuit, matrix_of_fermion,
    matrix_of_pauli_sum, DenseMatrix,
};
use fqc::pauli::{jw_map, PauliLetter};
use fqc::synth::{
    cnot_direction_variant, compile_generator_evolution, Gate, PauliRotation, TargetChoice,
};

use crate::CliError;

const ALGEBRA_TOLERANCE: f64 = 1e-12;

struct Block {
    name: &'static str,
    deviation: f64,
    tolerance: f64,
}

impl Block {
    fn passed(&self) -> bool {
        self.deviation <= self.tolerance
    }
}

pub fn run(tol: f64) -> Result<(), CliError> {
    let blocks = [
        car_identities()?,
        jw_oracle_theorem()?,
        gate_identities()?,
        controlled_phase_observable()?,
        h2_circuits(tol)?,
        ladder_direction_equivalence()?,
    ];

    let mut all_passed = true;
    for block in &blocks {
        let verdict = if block.passed() { "PASS" } else { "FAIL" };
        println!(
            "{:<44} max dev {:9.3e}  (tol {:.1e})  {verdict}",
            block.name, block.deviation, block.tolerance
        );
        all_passed &= block.passed();
    }
    if all_passed {
        println!("all checks passed");
        Ok(())
    } else {
        Err(CliError::Verification(
            "one or more cross-checks exceeded tolerance".into(),
        ))
    }
}

/// {a_p, a_q^} = delta_pq, {a_p, a_q} = 0, {a_p^, a_q^} = 0 at n = 5.
fn car_identities() -> Result<Block, CliError> {
    let n = 5;
    let identity = DenseMatrix::identity(n)?;
    let ladder = |p: usize, dagger: bool| -> Result<DenseMatrix, CliError> {
        let text = if dagger {
            format!("{p}^")
        } else {
            format!("{p}")
        };
        Ok(matrix_of_fermion(&parse_operator(&text, n)?, n)?)
    };
    let mut worst = 0.0f64;
    for p in 0..n {
        for q in 0..n {
            let anti = ladder(p, false)?.anticommutator(&ladder(q, true)?);
            let expected = if p == q {
                identity.clone()
            } else {
                DenseMatrix::zero(n)?
            };
            worst = worst.max(anti.max_abs_diff(&expected));
        }
    }
    for p in 0..n {
        for q in p..n {
            worst = worst.max(
                ladder(p, false)?
                    .anticommutator(&ladder(q, false)?)
                    .max_abs(),
            );
            worst = worst.max(ladder(p, true)?.anticommutator(&ladder(q, true)?).max_abs());
        }
    }
    Ok(Block {
        name: "anticommutation relations (n=5, 55 checks)",
        deviation: worst,
        tolerance: ALGEBRA_TOLERANCE,
    })
}

/// matrix(jw_map(F)) = matrix(F) for 200 seeded random operators.
fn jw_oracle_theorem() -> Result<Block, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xfc);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let n_modes = rng.random_range(1..=4);
        let terms: Vec<FermionTerm> = (0..rng.random_range(1..=4))
            .map(|_| {
                let ops: Vec<LadderOp> = (0..rng.random_range(0..=4))
                    .map(|_| LadderOp {
                        mode: rng.random_range(0..n_modes),
                        kind: if rng.random_bool(0.5) {
                            LadderKind::Create
                        } else {
                            LadderKind::Annihilate
                        },
                    })
                    .collect();
                FermionTerm::new(
                    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                    ops,
                )
            })
            .collect();
        let op = FermionOperator::from_terms(n_modes, terms)?;
        let symbolic = matrix_of_pauli_sum(&jw_map(&op, n_modes)?)?;
        let direct = matrix_of_fermion(&op, n_modes)?;
        worst = worst.max(symbolic.max_abs_diff(&direct));
    }
    Ok(Block {
        name: "jw map vs ladder-matrix oracle (200 ops)",
        deviation: worst,
        tolerance: ALGEBRA_TOLERANCE,
    })
}

/// (Rx(pi/2))^2 = -iX, (SX)^2 = X, SX = e^{i pi/4} Rx(pi/2).
fn gate_identities() -> Result<Block, CliError> {
    let report = phase_relation_check();
    let worst = report
        .checks
        .iter()
        .map(|c| c.deviation)
        .fold(0.0, f64::max);
    Ok(Block {
        name: "quarter-turn gate identities",
        deviation: worst,
        tolerance: ALGEBRA_TOLERANCE,
    })
}

/// Controlled quarter-turns must NOT be phase-equivalent; the block
/// reports 0 when the residual is large as expected.
fn controlled_phase_observable() -> Result<Block, CliError> {
    let sx = controlled(&gate_matrix(&Gate::Sx { qubit: 0 }))?;
    let rx = controlled(&gate_matrix(&Gate::Rx {
        qubit: 0,
        angle: std::f64::consts::FRAC_PI_2,
    }))?;
    let a = DenseMatrix::from_entries(2, sx.entries().clone())?;
    let b = DenseMatrix::from_entries(2, rx.entries().clone())?;
    let cmp = equal_up_to_global_phase(&a, &b, ALGEBRA_TOLERANCE)?;
    let deviation = if cmp.residual >= 0.1 { 0.0 } else { 1.0 };
    Ok(Block {
        name: "controlled phase is observable",
        deviation,
        tolerance: 0.5,
    })
}

/// Compiled H2 circuits against the exact exponential.
fn h2_circuits(tol: f64) -> Result<Block, CliError> {
    let excitations = [
        Excitation::single(0, 1)?,
        Excitation::single(2, 3)?,
        Excitation::double((0, 2), (1, 3))?,
    ];
    let mut worst = 0.0f64;
    for exc in &excitations {
        let generator = anti_hermitian_generator(exc, 4)?;
        let image = jw_map(&generator, 4)?;
        let direct = matrix_of_fermion(&generator, 4)?;
        for theta in [0.3, -0.7, 1.9] {
            let circuit = compile_generator_evolution(&image, theta)?;
            let exact = expm_antihermitian(&direct.scale(Complex64::new(theta, 0.0)))?;
            let cmp = equal_up_to_global_phase(&matrix_of_circuit(&circuit)?, &exact, tol)?;
            worst = worst.max(cmp.residual);
        }
    }
    Ok(Block {
        name: "H2 excitation circuits vs exact evolution",
        deviation: worst,
        tolerance: tol,
    })
}

/// Both CNOT ladder orientations give the same unitary.
fn ladder_direction_equivalence() -> Result<Block, CliError> {
    let mut worst = 0.0f64;
    for theta in [0.7, -2.1, 0.05] {
        let rot = PauliRotation::new(vec![PauliLetter::Y, PauliLetter::X], theta)?;
        let high = matrix_of_circuit(&cnot_direction_variant(&rot, TargetChoice::Highest)?)?;
        let low = matrix_of_circuit(&cnot_direction_variant(&rot, TargetChoice::Lowest)?)?;
        let cmp = equal_up_to_global_phase(&high, &low, ALGEBRA_TOLERANCE)?;
        worst = worst.max(cmp.residual);
    }
    Ok(Block {
        name: "cnot ladder orientation equivalence",
        deviation: worst,
        tolerance: ALGEBRA_TOLERANCE,
    })
}
