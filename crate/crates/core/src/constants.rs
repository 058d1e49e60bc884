//! Named polynomials and matrices that recur across the crate.

use crate::error::Result;
use crate::matrix::IntMatrix;
use crate::poly::{compare_roots, largest_real_root, order_powers, IntPolynomial, RootEnclosure, Tolerance};

/// `t² - t - 1`, whose largest root is the golden ratio μ.
pub fn golden() -> IntPolynomial {
    IntPolynomial::from_coeffs(&[-1, -1, 1])
}

/// `t² - 2t - 1`, whose largest root is the silver ratio σ = 1 + √2.
pub fn silver() -> IntPolynomial {
    IntPolynomial::from_coeffs(&[-1, -2, 1])
}

/// `t² - 6t + 1`, whose largest root is σ² = 3 + 2√2.
pub fn silver_squared() -> IntPolynomial {
    IntPolynomial::from_coeffs(&[1, -6, 1])
}

/// `t^(2n) - 6t^n + 1`: its largest root is the unique `x > 0` with
/// `x^n = 3 + 2√2`, so comparing a largest root against it compares the
/// n-th power against σ² exactly.
pub fn silver_squared_root(n: usize) -> IntPolynomial {
    silver_squared().inflate(n)
}

/// Lehmer's polynomial `t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1`.
pub fn lehmer() -> IntPolynomial {
    IntPolynomial::from_coeffs(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

/// `t^4 - t^3 - t^2 - t + 1`.
pub fn lt12() -> IntPolynomial {
    IntPolynomial::from_coeffs(&[1, -1, -1, -1, 1])
}

pub const SILVER_SQUARED: f64 = 5.828_427_124_746_19;
pub const GOLDEN: f64 = 1.618_033_988_749_895;
pub const SILVER: f64 = 2.414_213_562_373_095;

/// The 4×4 real transition matrix of the four-punctured torus example,
/// with characteristic polynomial `t^4 - t^2 - 2t - 1`.
pub fn punctured_torus_matrix() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![0, 0, 1, 1],
        vec![1, 0, 0, 0],
        vec![1, 1, 0, 0],
        vec![0, 0, 1, 0],
    ])
    .expect("square")
}

/// `[[1, 1], [1, 0]]`.
pub fn fibonacci_matrix() -> IntMatrix {
    IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).expect("square")
}

/// Exact order of `λ^n` against `3 + 2√2`, for a positive root `λ`.
/// Disjoint power intervals decide it in almost all cases; equality (and
/// anything too close to call) falls back to comparing `λ` with the largest
/// root of `t^(2n) - 6t^n + 1` exactly.
pub fn compare_normalized_to_silver_squared(
    root: &RootEnclosure,
    n: usize,
) -> Result<std::cmp::Ordering> {
    let bits = root.width().exp().max(Tolerance::default().bits());
    let sigma2 = largest_real_root(&silver_squared(), Tolerance::from_bits(bits))?;
    if let Some(o) = order_powers(root, n as u32, &sigma2, 1, 4)? {
        return Ok(o);
    }
    let threshold = largest_real_root(&silver_squared_root(n), Tolerance::from_bits(bits))?;
    compare_roots(root, &threshold)
}
