//! The 11 + 55 + 462 = 528 generators of the M-algebra built from a
//! Cl(10,1) generator family over five Cl(1,3)+ factors.
//!
//! ```bash
//! cargo run --release --example m_algebra
//! ```

use cliffq::malgebra::{cl07_generators, cl101_generators, cl101_generators_with_iota_g30, verify_m_algebra};

fn main() -> cliffq::Result<()> {
    for family in [cl07_generators(), cl101_generators(), cl101_generators_with_iota_g30()] {
        let check = family.check();
        println!(
            "{}: {} generators, anticommuting: {}, offending pairs {:?}",
            family.name,
            family.len(),
            check.anticommuting(),
            check.offending_pairs
        );
    }
    let start = std::time::Instant::now();
    let report = verify_m_algebra()?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    println!("built and checked in {:.2?}", start.elapsed());
    Ok(())
}
