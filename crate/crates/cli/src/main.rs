//! Command-line front end: parse operators and systems, run the
//! map -> compile -> verify pipeline, emit Pauli sums and circuits.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse or input error.

mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use fqc::fermion::{anti_hermitian_generator, parse_operator, Excitation};
use fqc::gates::gate_matrix;
use fqc::oracle::{
    equal_up_to_global_phase, expm_antihermitian, matrix_of_circuit, matrix_of_fermion,
};
use fqc::orbitals::{enumerate_doubles, enumerate_singles, h2_sto3g, OrbitalSystem};
use fqc::pauli::{format_complex, jw_map};
use fqc::synth::{compile_generator_evolution_with, Circuit, Gate, TargetChoice};
use fqc::Error;

#[derive(Parser)]
#[command(
    name = "fqc",
    version,
    about = "Compile fermionic excitation operators to Pauli sums and gate circuits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Qasm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetChoiceArg {
    Lowest,
    Highest,
}

impl From<TargetChoiceArg> for TargetChoice {
    fn from(arg: TargetChoiceArg) -> Self {
        match arg {
            TargetChoiceArg::Lowest => TargetChoice::Lowest,
            TargetChoiceArg::Highest => TargetChoice::Highest,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Map an operator string to its Jordan-Wigner Pauli sum
    Map {
        /// Operator text, e.g. "3^ 1^ 2 0"; `^` marks creation, terms join
        /// with `+`, coefficients prefix as `(re,im)*`
        operator: String,
        /// Register width; defaults to the highest mode plus one
        #[arg(short = 'n', long = "qubits")]
        qubits: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the allowed single and double excitations of a system
    Excitations {
        /// `h2` or a path to a JSON system description
        #[arg(long, default_value = "h2")]
        system: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compile exp(theta (T - T^dag)) for one excitation and verify it
    Compile {
        /// `i->a` for singles, `i,j->a,b` for doubles
        #[arg(long)]
        excitation: String,
        /// Rotation amplitude in radians
        #[arg(long)]
        theta: f64,
        /// `h2` or a path to a JSON system description
        #[arg(long, default_value = "h2")]
        system: String,
        /// Register width; defaults to the system size
        #[arg(short = 'n', long = "qubits")]
        qubits: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Which end of each CNOT ladder takes the Rz
        #[arg(long, value_enum, default_value_t = TargetChoiceArg::Highest)]
        target_choice: TargetChoiceArg,
        /// Oracle residual tolerance
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Run the dense-matrix cross-check suite
    Verify {
        /// Circuit residual tolerance
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Print the exact matrix of one gate
    DumpGate {
        /// One of: h, sx, cx, rx, rz
        name: String,
        /// Rotation angle in radians (rx and rz only)
        #[arg(long)]
        angle: Option<f64>,
    },
}

/// Failures mapped onto the documented exit codes.
enum CliError {
    /// Malformed input: exit 2.
    Input(String),
    /// A cross-check exceeded its tolerance: exit 1.
    Verification(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification(message)) => {
            eprintln!("verification failure: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Map {
            operator,
            qubits,
            format,
        } => run_map(&operator, qubits, format),
        Command::Excitations { system, format } => run_excitations(&system, format),
        Command::Compile {
            excitation,
            theta,
            system,
            qubits,
            format,
            target_choice,
            tol,
        } => run_compile(
            &excitation,
            theta,
            &system,
            qubits,
            format,
            target_choice.into(),
            tol,
        ),
        Command::Verify { tol } => verify::run(tol),
        Command::DumpGate { name, angle } => run_dump_gate(&name, angle),
    }
}

/// Symbolic mapping stays cheap far beyond this, but a register wider than
/// any plausible input is a typo, not a request.
const MAX_CLI_QUBITS: usize = 64;

fn check_register(n: usize) -> Result<usize, CliError> {
    if n == 0 || n > MAX_CLI_QUBITS {
        return Err(CliError::Input(format!(
            "register width {n} is outside 1..={MAX_CLI_QUBITS}"
        )));
    }
    Ok(n)
}

fn load_system(spec: &str) -> Result<OrbitalSystem, CliError> {
    if spec == "h2" {
        return Ok(h2_sto3g());
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| CliError::Input(format!("cannot read system file '{spec}': {e}")))?;
    Ok(OrbitalSystem::from_json(&text)?)
}

fn run_map(operator: &str, qubits: Option<usize>, format: Format) -> Result<(), CliError> {
    // width defaults to the highest referenced mode plus one
    let inferred = parse_operator(operator, usize::MAX)
        .map_err(CliError::from)?
        .terms()
        .iter()
        .flat_map(|t| t.ops.iter().map(|op| op.mode))
        .max()
        .map_or(1, |mode| mode + 1);
    let n = check_register(qubits.unwrap_or(inferred))?;
    let op = parse_operator(operator, n)?;
    let sum = jw_map(&op, n)?;
    match format {
        Format::Text => print!("{}", sum.to_text()),
        Format::Json => println!("{}", sum.to_json()),
        Format::Qasm => {
            return Err(CliError::Input(
                "qasm format applies to circuits; use `compile`".into(),
            ))
        }
    }
    Ok(())
}

fn run_excitations(system: &str, format: Format) -> Result<(), CliError> {
    let sys = load_system(system)?;
    let singles = enumerate_singles(&sys);
    let doubles = enumerate_doubles(&sys);
    match format {
        Format::Text => {
            for exc in &singles {
                println!("single {exc}");
            }
            for exc in &doubles {
                println!("double {exc}");
            }
        }
        Format::Json => {
            let dto: Vec<String> = singles
                .iter()
                .map(|e| {
                    format!(
                        "{{\"kind\":\"single\",\"excitation\":\"{e}\",\"parameter\":\"{}\"}}",
                        e.parameter_label()
                    )
                })
                .chain(doubles.iter().map(|e| {
                    format!(
                        "{{\"kind\":\"double\",\"excitation\":\"{e}\",\"parameter\":\"{}\"}}",
                        e.parameter_label()
                    )
                }))
                .collect();
            println!("[{}]", dto.join(","));
        }
        Format::Qasm => {
            return Err(CliError::Input(
                "qasm format applies to circuits; use `compile`".into(),
            ))
        }
    }
    Ok(())
}

fn parse_excitation(text: &str) -> Result<Excitation, CliError> {
    let (from, to) = text
        .split_once("->")
        .ok_or_else(|| CliError::Input(format!("excitation '{text}' must contain '->'")))?;
    let parse_side = |side: &str| -> Result<Vec<usize>, CliError> {
        side.split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| {
                    CliError::Input(format!("bad mode '{}' in excitation", tok.trim()))
                })
            })
            .collect()
    };
    let from = parse_side(from)?;
    let to = parse_side(to)?;
    let exc = match (from.as_slice(), to.as_slice()) {
        ([i], [a]) => Excitation::single(*i, *a)?,
        ([i, j], [a, b]) => Excitation::double((*i, *j), (*a, *b))?,
        _ => {
            return Err(CliError::Input(
                "excitation must be 'i->a' or 'i,j->a,b'".into(),
            ))
        }
    };
    Ok(exc)
}

fn run_compile(
    excitation: &str,
    theta: f64,
    system: &str,
    qubits: Option<usize>,
    format: Format,
    target_choice: TargetChoice,
    tol: f64,
) -> Result<(), CliError> {
    let sys = load_system(system)?;
    let exc = parse_excitation(excitation)?;
    sys.validate_excitation(&exc)?;
    let n = check_register(qubits.unwrap_or_else(|| sys.n_modes()))?;
    if n < exc.max_mode() + 1 {
        return Err(CliError::Input(format!(
            "register of {n} qubits cannot hold mode {}",
            exc.max_mode()
        )));
    }

    let generator = anti_hermitian_generator(&exc, n)?;
    let image = jw_map(&generator, n)?;
    let circuit = compile_generator_evolution_with(&image, theta, target_choice)?;

    match format {
        Format::Text => {
            println!("# excitation {exc} ({})", exc.parameter_label());
            println!("# theta {theta}");
            for gate in circuit.gates() {
                println!("{}", render_gate(gate));
            }
        }
        Format::Json => println!("{}", circuit.to_json()),
        Format::Qasm => print!("{}", circuit.to_qasm()),
    }

    match oracle_residual(&generator, n, theta, &circuit) {
        Ok(residual) => {
            let line = format!("oracle residual {residual:.3e} (tol {tol:.1e})");
            match format {
                Format::Text => println!("# {line}"),
                _ => eprintln!("{line}"),
            }
            if residual > tol {
                return Err(CliError::Verification(format!(
                    "circuit residual {residual:.3e} exceeds tolerance {tol:.1e}"
                )));
            }
        }
        Err(Error::TooManyQubits { n_qubits, max }) => {
            eprintln!("oracle check skipped: {n_qubits} qubits exceeds the dense limit of {max}");
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn oracle_residual(
    generator: &fqc::FermionOperator,
    n: usize,
    theta: f64,
    circuit: &Circuit,
) -> Result<f64, Error> {
    let direct = matrix_of_fermion(generator, n)?;
    let exact = expm_antihermitian(&direct.scale(Complex64::new(theta, 0.0)))?;
    let synthesized = matrix_of_circuit(circuit)?;
    // tolerance here only classifies; the caller compares the residual
    let cmp = equal_up_to_global_phase(&synthesized, &exact, 1e-10)?;
    Ok(cmp.residual)
}

fn render_gate(gate: &Gate) -> String {
    match *gate {
        Gate::H { qubit } => format!("h q{qubit}"),
        Gate::Sx { qubit } => format!("sx q{qubit}"),
        Gate::Rx { qubit, angle } => format!("rx({angle:+.4}) q{qubit}"),
        Gate::Rz { qubit, angle } => format!("rz({angle:+.4}) q{qubit}"),
        Gate::Cnot { control, target } => format!("cx q{control}, q{target}"),
    }
}

fn run_dump_gate(name: &str, angle: Option<f64>) -> Result<(), CliError> {
    let needs_angle = |angle: Option<f64>| {
        angle.ok_or_else(|| CliError::Input(format!("gate '{name}' needs --angle")))
    };
    let gate = match name.to_ascii_lowercase().as_str() {
        "h" => Gate::H { qubit: 0 },
        "sx" => Gate::Sx { qubit: 0 },
        "cx" | "cnot" => Gate::Cnot {
            control: 0,
            target: 1,
        },
        "rx" => Gate::Rx {
            qubit: 0,
            angle: needs_angle(angle)?,
        },
        "rz" => Gate::Rz {
            qubit: 0,
            angle: needs_angle(angle)?,
        },
        other => {
            return Err(CliError::Input(format!(
                "unknown gate '{other}' (expected h, sx, cx, rx, rz)"
            )))
        }
    };
    let matrix = gate_matrix(&gate);
    for row in 0..matrix.dim() {
        let cells: Vec<String> = (0..matrix.dim())
            .map(|col| format_complex(matrix.entry(row, col)))
            .collect();
        println!("{}", cells.join(" "));
    }
    Ok(())
}
