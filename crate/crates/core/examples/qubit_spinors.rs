//! Qubits as elements of a minimal left ideal, cross-checked against the
//! matrix oracle.
//!
//! ```bash
//! cargo run --example qubit_spinors
//! ```

use cliffq::clifford::Signature;
use cliffq::spinor::{
    bipartite_det, decode, decode_via_rep, encode, encode_in, ideal_basis, primitive_idempotent, IdealElement,
    QubitState,
};

fn main() -> cliffq::Result<()> {
    println!("ε = {}", primitive_idempotent(Signature::cl30())?);
    println!("P = {}", primitive_idempotent(Signature::cl13())?);
    for b in ideal_basis(Signature::cl30())? {
        println!("  ideal basis: {b}");
    }

    let psi = QubitState::parse("0.6,0;0,0.8")?;
    let x = encode(&psi);
    println!("{psi} -> {x} -> {}", decode(&x)?);

    let bell = QubitState::parse("0.7071067811865476,0;0,0;0,0;0.7071067811865476,0")?;
    let y = encode_in(Signature::cl13(), &bell)?;
    println!("Bell state in Cl(1,3): {y}");
    println!("  decode          = {}", decode(&y)?);
    println!("  via Pauli rep   = {}", decode_via_rep(&y)?);
    println!("  |det|           = {}", bipartite_det(&decode(&y)?).norm());

    // σ1⊗σ1 ε⊗ε and σ3⊗σ3 ε⊗ε with an ι moved between factors decode alike
    let a = IdealElement::parse("e123⊗e3 ε⊗ε")?;
    let b = IdealElement::parse("e3⊗e123 ε⊗ε")?;
    println!("{a} and {b} both decode to {}", decode(&a)?);
    println!("same body: {}", a == b);
    Ok(())
}
