use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cliffq::clifford::Signature;
use cliffq::gates::{catalog, lift_matrix, synthesize, CATALOG};
use cliffq::relativistic::{charge_conjugation_op, chirality_op, parity_op, time_reversal_op};
use cliffq::spinor::{apply_gate, decode, encode, encode_in, IdealElement, QubitState};
use cliffq::verify::{run_suite, Config, SUITES};

/// Clifford-algebra qubits: verification suites, gates, states, operators.
#[derive(Parser)]
#[command(name = "cliffq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print one line per check.
    Verify(VerifyArgs),
    /// Synthesize or apply a catalog gate.
    Gate {
        #[arg(value_enum)]
        action: GateAction,
        #[arg(long)]
        name: String,
        /// Amplitudes as "re,im;re,im;..." (apply only).
        #[arg(long)]
        state: Option<String>,
    },
    /// Encode amplitudes as an ideal element, or decode one.
    State {
        #[arg(value_enum)]
        action: StateAction,
        payload: String,
    },
    /// Apply a relativistic operator to an encoded two-qubit state.
    Op {
        #[arg(value_enum)]
        action: OpAction,
        #[arg(long, value_enum)]
        name: OpName,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        phi: f64,
        #[arg(long)]
        state: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// One of the suite names, or "all".
    #[arg(long)]
    suite: String,
    /// Also write the report as JSON.
    #[arg(long)]
    json: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Override the tolerance of every non-exact check.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GateAction {
    Synth,
    Apply,
}

#[derive(Clone, Copy, ValueEnum)]
enum StateAction {
    Encode,
    Decode,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpAction {
    Apply,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpName {
    Chirality,
    Parity,
    Cconj,
    Timerev,
}

enum Failure {
    Usage(String),
    Check,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let cfg = Config { seed: args.seed, tol: args.tol };
    let report = run_suite(&args.suite, &cfg).ok_or_else(|| {
        Failure::Usage(format!("unknown suite '{}'; expected all, {}", args.suite, SUITES.join(", ")))
    })?;
    for c in &report.checks {
        println!("{:<8} {:<70} {:.3e}  {}", format!("{:?}", c.status).to_uppercase(), c.name, c.residual, c.details);
    }
    let s = report.summary;
    println!("{} checks: {} pass, {} fail, {} reported", s.total, s.pass, s.fail, s.reported);
    if let Some(path) = &args.json {
        std::fs::write(path, report.to_json() + "\n")?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn gate(action: GateAction, name: &str, state: Option<&str>) -> Result<(), Failure> {
    let (matrix, n) = catalog(name)
        .ok_or_else(|| Failure::Usage(format!("unknown gate '{name}'; expected one of {}", CATALOG.join(", "))))?;
    match action {
        GateAction::Synth => {
            let syn = synthesize(&matrix, n)?;
            println!("element:   {}", lift_matrix(&matrix, n)?);
            println!("generator: {}", syn.generator);
            println!("residual:  {:.3e}", syn.residual);
            if syn.branch_ambiguous {
                println!("note: eigenvalue -1, log branch +iπ taken");
            }
        }
        GateAction::Apply => {
            let state =
                QubitState::parse(state.ok_or_else(|| Failure::Usage("--state is required for apply".into()))?)?;
            if state.n() != n {
                return Err(Failure::Usage(format!("gate '{name}' acts on {n} qubits, state has {}", state.n())));
            }
            let out = apply_gate(&lift_matrix(&matrix, n)?, &encode(&state))?;
            println!("{}", decode(&out)?);
        }
    }
    Ok(())
}

fn state(action: StateAction, payload: &str) -> Result<(), Failure> {
    match action {
        StateAction::Encode => println!("{}", encode(&QubitState::parse(payload)?)),
        StateAction::Decode => println!("{}", decode(&IdealElement::parse(payload)?)?),
    }
    Ok(())
}

fn op(name: OpName, phi: f64, payload: &str) -> Result<(), Failure> {
    let state = QubitState::parse(payload)?;
    if state.n() != 2 {
        return Err(Failure::Usage(format!("operators act on two-qubit states, got {}", state.n())));
    }
    let x = match name {
        OpName::Chirality => chirality_op(),
        OpName::Parity => parity_op(phi),
        OpName::Cconj => charge_conjugation_op(),
        OpName::Timerev => time_reversal_op(),
    };
    let out = apply_gate(&x, &encode_in(Signature::cl13(), &state)?)?;
    println!("{out}");
    println!("{}", decode(&out)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Verify(args) => verify(args),
        Command::Gate { action, name, state } => gate(*action, name, state.as_deref()),
        Command::State { action, payload } => state(*action, payload),
        Command::Op { name, phi, state, .. } => op(*name, *phi, state),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
