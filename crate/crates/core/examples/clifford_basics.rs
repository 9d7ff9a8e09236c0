//! Geometric products and the exponential in Cl(3,0) and Cl(1,3).
//!
//! ```bash
//! cargo run --example clifford_basics
//! ```

use std::f64::consts::FRAC_PI_2;

use cliffq::algebra::exponential;
use cliffq::clifford::{Multivector, Signature};

fn main() -> cliffq::Result<()> {
    let s = Signature::cl30();
    let e1 = Multivector::generator(s, 1);
    let e2 = Multivector::generator(s, 2);
    let e3 = Multivector::generator(s, 3);

    println!("e1 e1       = {}", &e1 * &e1);
    println!("e1 e2       = {}", &e1 * &e2);
    println!("e2 e1       = {}", &e2 * &e1);
    let i = &(&e1 * &e2) * &e3;
    println!("(e1e2e3)^2  = {}", &i * &i);
    println!("reverse(e123) = {}", i.reverse());

    let a = Multivector::parse(s, "1 + 2 e1 - 0.5 e23")?;
    println!("a           = {a}");
    println!("reverse(a)  = {}", a.reverse());
    println!("grade 2 of a = {}", a.grade_project(2));

    // a quarter turn in the e2e3 plane
    let b = Multivector::parse(s, "e23")?.scale(FRAC_PI_2);
    println!("exp(π/2 e23) = {}", exponential(&b, 1e-15)?);

    let m = Signature::cl13();
    for mu in 0..4 {
        let g = Multivector::generator(m, mu);
        println!("g{mu}^2 = {}", &g * &g);
    }
    Ok(())
}
