//! Chirality, parity, charge conjugation and time reversal acting on
//! two-qubit states in Cl(1,3)+ ⊗ Cl(1,3)+.
//!
//! ```bash
//! cargo run --example cpt_operators
//! ```

use cliffq::clifford::Signature;
use cliffq::relativistic::{
    charge_conjugation_op, chiral_projectors, chirality_op, parity_op, time_reversal_op, unitary_sign,
};
use cliffq::spinor::{apply_gate, bipartite_det, decode, encode_in, QubitState};

fn main() -> cliffq::Result<()> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let bells = [
        ("(|00⟩+|11⟩)/√2", QubitState::new(vec![r.into(), 0.0.into(), 0.0.into(), r.into()])?),
        ("(|01⟩+|10⟩)/√2", QubitState::new(vec![0.0.into(), r.into(), r.into(), 0.0.into()])?),
    ];
    let ops =
        [("Γ5", chirality_op()), ("P(0)", parity_op(0.0)), ("C", charge_conjugation_op()), ("T", time_reversal_op())];
    for (name, op) in &ops {
        println!("{name} = {op}   (x x† = {:?})", unitary_sign(op)?);
        for (label, psi) in &bells {
            let out = decode(&apply_gate(op, &encode_in(Signature::cl13(), psi)?)?)?;
            println!("  {label} -> {out}   |det| = {:.3}", bipartite_det(&out).norm());
        }
    }

    let (pr, pl) = chiral_projectors();
    let psi = encode_in(Signature::cl13(), &QubitState::parse("0.5,0;0.5,0;0,0.5;0.5,0")?)?;
    for (name, p) in [("P_R", pr), ("P_L", pl)] {
        let out = decode(&apply_gate(&p, &psi)?)?;
        println!("{name} Ψ = {out}   det = {:.1e}", bipartite_det(&out).norm());
    }
    Ok(())
}
