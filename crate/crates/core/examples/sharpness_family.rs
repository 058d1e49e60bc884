//! The `2k × 2k` matrices whose normalized spectral radius decreases to
//! `3 + 2√2` along each parity class of `k`.
//!
//!     cargo run --release --example sharpness_family

use stretch_lab::constants::SILVER_SQUARED;
use stretch_lab::sharpness::{build_example, convergence_row, convergence_table};
use stretch_lab::{Result, Tolerance};

fn main() -> Result<()> {
    let tol = Tolerance::default();
    let e = build_example(5, tol)?;
    println!("k = 5, p = {}, q = {}", e.p_k, e.q_k);
    println!("{}", e.matrix);
    println!("char poly {}  all checks {}", e.char_poly, e.all_checks_pass());
    for row in convergence_table(12, tol)? {
        println!("k = {:3}  P_k = {}  residual {:.1e}", row.k, row.normalized.decimal, row.residual);
    }
    let far = convergence_row(200, tol)?;
    println!(
        "k = 200  P_k = {}  gap {:.2e}",
        far.normalized.decimal,
        far.root.pow(400).midpoint_f64() - SILVER_SQUARED
    );
    Ok(())
}
