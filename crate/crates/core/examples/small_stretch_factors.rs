//! The ordering of μ, σ and μ², square roots of quadratic units, and unit
//! circle root counts of two Salem polynomials.
//!
//!     cargo run --example small_stretch_factors

use stretch_lab::cli::repro_set_theorem;
use stretch_lab::{Result, Tolerance};

fn main() -> Result<()> {
    let o = repro_set_theorem(Tolerance::default())?;
    println!("{}", serde_json::to_string_pretty(&o.report).expect("json"));
    Ok(())
}
