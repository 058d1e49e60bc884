//! Classifies a few characteristic polynomials: reciprocity, cyclotomic
//! factors, the skew-reciprocal core and the parity condition.
//!
//!     cargo run --example classify_polynomial

use stretch_lab::classify::classify;
use stretch_lab::constants::{golden, lehmer};
use stretch_lab::{IntPolynomial, Result};

fn main() -> Result<()> {
    let samples = [
        ("t^4 - t^2 - 2t - 1", IntPolynomial::from_coeffs(&[-1, -2, -1, 0, 1])),
        ("golden", golden()),
        ("lehmer", lehmer()),
        ("t^3 - 2t - 1", IntPolynomial::from_coeffs(&[-1, -2, 0, 1])),
    ];
    for (name, p) in samples {
        let c = classify(&p)?;
        println!("{name}: {p}");
        println!("  reciprocal            {:?}", c.reciprocal);
        println!("  skew-reciprocal       {:?}", c.skew_reciprocal);
        println!("  cyclotomic factors    {:?}", c.cyclotomic_factors);
        println!("  core                  {}", c.core);
        println!("  skew up to cyclotomic {}", c.skew_up_to_cyclotomic);
        println!("  parity condition      {}", c.parity_ok);
    }
    Ok(())
}
