//! The Pauli representation as an independent oracle for algebra products
//! and exponentials.
//!
//! ```bash
//! cargo run --example matrix_oracle
//! ```

use cliffq::algebra::exponential;
use cliffq::clifford::Signature;
use cliffq::matrix::{expm, logm_unitary, rep_cl30, rep_tensor};
use cliffq::random::{bounded_multivector, dyadic_tensor, stream, unitary};

fn main() -> cliffq::Result<()> {
    let mut rng = stream(7, "example");
    let a = bounded_multivector(&mut rng, Signature::cl30(), 2.0);
    let b = bounded_multivector(&mut rng, Signature::cl30(), 2.0);
    println!("a = {a}");
    let lhs = rep_cl30(&(&a * &b))?;
    let rhs = rep_cl30(&a)?.try_mul(&rep_cl30(&b)?)?;
    println!("|rep(ab) - rep(a)rep(b)|     = {:.1e}", lhs.max_abs_diff(&rhs));
    println!("|rep(~a) - rep(a)†|          = {:.1e}", rep_cl30(&a.reverse())?.max_abs_diff(&rep_cl30(&a)?.adjoint()));
    println!(
        "|rep(exp a) - expm(rep a)|   = {:.1e}",
        rep_cl30(&exponential(&a, 1e-15)?)?.distance(&expm(&rep_cl30(&a)?))
    );

    let factors = [Signature::cl30(); 3];
    let x = dyadic_tensor(&mut rng, &factors, 4);
    let y = dyadic_tensor(&mut rng, &factors, 4);
    let kron = rep_tensor(&(&x * &y))?.max_abs_diff(&rep_tensor(&x)?.try_mul(&rep_tensor(&y)?)?);
    println!("three factors, |rep(xy) - rep(x)rep(y)| = {kron:.1e}");

    let u = unitary(&mut rng, 4);
    let log = logm_unitary(&u)?;
    println!("|expm(logm U) - U| = {:.1e}", expm(&log.log).distance(&u));
    Ok(())
}
