//! Exhaustive search over small nonnegative matrices for the least
//! normalized spectral radius among primitive, unimodular matrices whose
//! characteristic polynomial is skew-reciprocal up to cyclotomic factors.
//!
//!     cargo run --release --example matrix_search

use stretch_lab::search::{run_search, SearchConfig};
use stretch_lab::Result;

fn main() -> Result<()> {
    for (n, max_entry) in [(2, 2), (3, 2), (4, 1)] {
        let r = run_search(&SearchConfig::new(n, max_entry))?;
        println!(
            "n = {n}, entries <= {max_entry}: {} scanned, {} qualifying, {} below 3 + 2√2",
            r.scanned,
            r.qualifying,
            r.violations.len()
        );
        if let Some(m) = r.minimum {
            println!("  minimum {} at {} ({})", m.normalized.decimal, m.matrix, m.char_poly);
        }
    }
    Ok(())
}
