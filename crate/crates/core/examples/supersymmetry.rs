//! Grassmann-like theta elements and their bracket table.
//!
//! ```bash
//! cargo run --example supersymmetry
//! ```

use cliffq::susy::{action_matrix, bracket_table, charge_conj_hat, theta_elements, theta_matrix_rep};

fn main() -> cliffq::Result<()> {
    let t = theta_elements();
    let names: Vec<&str> = t.all().iter().map(|(n, _)| *n).collect();
    for (name, x) in t.all() {
        println!("{name:>3} = {x}");
    }
    println!("\nbracket table");
    println!("     {}", names.iter().map(|n| format!("{n:>5}")).collect::<String>());
    for (name, row) in names.iter().zip(bracket_table()?) {
        println!("{name:>4} {}", row.iter().map(|v| format!("{v:>5}")).collect::<String>());
    }
    println!();
    for (name, m) in names.iter().zip(theta_matrix_rep()?) {
        println!("{name:>3}: {m:?}");
    }
    let c = charge_conj_hat();
    println!("\nĈ = {c}");
    for row in action_matrix(&c)? {
        println!("  {row:?}");
    }
    Ok(())
}
