//! Enumerates the admissible polynomials of the five curve-graph forms in
//! each degree and reports the least normalized largest root, then scans
//! the symmetric branches for monotonicity.
//!
//!     cargo run --release --example family_bound

use stretch_lab::families::{enumerate, monotonicity_scan, FormTag, ScanBranch, DEFAULT_MAX_DEGREE};
use stretch_lab::{Result, Tolerance};

fn main() -> Result<()> {
    let tol = Tolerance::default();
    for n in [4, 5, 6, 7, 8, 9, 10, 12] {
        let e = enumerate(n, &FormTag::ALL, tol, DEFAULT_MAX_DEGREE)?;
        let min = e.minimum().map_or("-".to_string(), |m| {
            format!("{} ({})", m.normalized_largest_root.as_ref().map_or("-", |e| e.decimal.as_str()), m.polynomial)
        });
        println!(
            "n = {n:2}: {:3} candidates, {:2} admissible, minimum {min}, bound holds {}",
            e.candidates,
            e.admissible.len(),
            e.bound_holds()
        );
    }
    for branch in [ScanBranch::ThreeA1, ScanBranch::FourA1, ScanBranch::FiveA1] {
        let s = monotonicity_scan(branch, 12, 0..=5, tol)?;
        println!(
            "{branch:?} at n = 12: start {}, strictly increasing {}",
            s.values[0].normalized.decimal, s.strictly_increasing
        );
    }
    Ok(())
}
