//! Characteristic polynomial, determinant, primitivity and a certified
//! normalized spectral radius for a 4×4 transition matrix.
//!
//!     cargo run --example matrix_spectral_radius

use stretch_lab::constants::punctured_torus_matrix;
use stretch_lab::{Result, Tolerance};

fn main() -> Result<()> {
    let a = punctured_torus_matrix();
    println!("A = {a}");
    println!("char poly   {}", a.char_poly());
    println!("det         {}", a.det());
    println!("primitivity {:?}", a.primitivity());
    println!("Wielandt    {}", a.wielandt_primitive());
    let (rho, normalized) = a.normalized_spectral_radius(Tolerance::default())?;
    println!("rho(A)      {} in [{}, {}]", rho.decimal(), rho.lo, rho.hi);
    println!("rho(A)^4    {}", normalized.decimal());
    Ok(())
}
