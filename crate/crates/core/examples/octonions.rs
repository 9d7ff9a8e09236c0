//! Octonion arithmetic and a zero-pattern entanglement witness for
//! octonionic qubits.
//!
//! ```bash
//! cargo run --example octonions
//! ```

use cliffq::octonion::{associator, octonionic_cl101, oqubit_pattern_check, Octonion, OctonionQubitPair};

fn main() -> cliffq::Result<()> {
    let a = Octonion::parse("1 + o1 - 2 o4")?;
    let b = Octonion::parse("o2 + 0.5 o7")?;
    println!("a = {a}, b = {b}");
    println!("ab = {}, |ab| = {:.6}, |a||b| = {:.6}", a * b, (a * b).norm(), a.norm() * b.norm());
    let (o1, o2, o4) = (Octonion::unit(1), Octonion::unit(2), Octonion::unit(4));
    println!("(o1 o2) o4 = {}, o1 (o2 o4) = {}", (o1 * o2) * o4, o1 * (o2 * o4));
    println!("associator = {}", associator(&o1, &o2, &o4));

    let gens = octonionic_cl101();
    println!(
        "{} octonionic generators: {}",
        gens.len(),
        gens.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", ")
    );

    let z = Octonion::ZERO;
    let states = [
        ("(a,0,0,b)", OctonionQubitPair::new([a, z, z, b])),
        ("(0,a,b,0)", OctonionQubitPair::new([z, a, b, z])),
        ("(a,0,0,0)", OctonionQubitPair::new([a, z, z, z])),
        ("product", OctonionQubitPair::product([a, b], [b, o4])),
    ];
    for (label, s) in &states {
        println!("{label:>10}: {:?}", oqubit_pattern_check(s)?);
    }
    Ok(())
}
