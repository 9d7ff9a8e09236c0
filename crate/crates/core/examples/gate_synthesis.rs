//! Gates as algebra elements: the X and CNOT constructions and synthesis of
//! catalog gates as exponentials of u(2^n) generators.
//!
//! ```bash
//! cargo run --example gate_synthesis
//! ```

use cliffq::gates::{
    catalog, cnot_from_exponentials, lift_matrix, synthesize, u_generator_basis, x_from_exponentials, CATALOG,
    GATE_ALPHA, GATE_THETA,
};
use cliffq::spinor::{apply_gate, decode, encode, QubitState};

fn main() -> cliffq::Result<()> {
    for n in 1..=3 {
        println!("u(2^{n}) basis: {} elements", u_generator_basis(n)?.elements.len());
    }
    println!("exp(-π/2 σ123) exp(π/2 σ23) = {}", x_from_exponentials(GATE_ALPHA, GATE_THETA)?);
    println!("CNOT = {}", cnot_from_exponentials(GATE_ALPHA, GATE_THETA)?);

    for name in CATALOG {
        let (m, n) = catalog(name).expect("catalog name");
        let syn = synthesize(&m, n)?;
        println!(
            "{name:>5}: residual {:.1e}{}",
            syn.residual,
            if syn.branch_ambiguous { " (eigenvalue -1)" } else { "" }
        );
    }

    let (cnot, _) = catalog("cnot").expect("catalog name");
    let u = lift_matrix(&cnot, 2)?;
    for k in 0..4 {
        let out = decode(&apply_gate(&u, &encode(&QubitState::basis(2, k)))?)?;
        println!("CNOT |{k:02b}⟩ = {out}");
    }
    Ok(())
}
