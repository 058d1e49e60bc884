//! The `2k × 2k` matrices `P + N` whose normalized spectral radius `P_k`
//! decreases to `3 + 2√2` along each parity class of `k`.
//!
//! `P` is the cyclic shift (`P_ij = 1` iff `i ≡ j + 1 mod 2k`) and `N` has
//! ones at `(1, p_k)` and `(1, 2k - p_k)`, indices in `1..=2k`, with
//! `p_k = k + 1` for even `k` and `k + 2` for odd `k`. The characteristic
//! polynomial is `t^{2k} - t^{p_k} - t^{2k-p_k} - 1`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{is_skew_reciprocal_up_to_cyclotomic, parity_condition};
use crate::constants::compare_normalized_to_silver_squared;
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, PrimitivityReport};
use crate::poly::{
    largest_real_root, order_powers, EnclosureJson, IntPolynomial, RootEnclosure, Tolerance,
    ValueEnclosure,
};

pub fn p_k(k: usize) -> usize {
    if k.is_multiple_of(2) {
        k + 1
    } else {
        k + 2
    }
}

/// Inverse of `p_k` modulo `2k`, in `(0, 2k)`.
pub fn q_k(k: usize) -> usize {
    let m = 2 * k as i64;
    let e = (p_k(k) as i64).extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m) as usize
}

/// `P + N` for the given `k ≥ 2`.
pub fn sharpness_matrix(k: usize) -> Result<IntMatrix> {
    check_k(k)?;
    let n = 2 * k;
    let p = p_k(k);
    let mut m = IntMatrix::zero(n);
    // 1-based (i, j) with i = j + 1 mod 2k
    for j in 1..=n {
        let i = j % n + 1;
        m.set(i - 1, j - 1, BigInt::one());
    }
    for col in [p, n - p] {
        let cur = m.get(0, col - 1).clone();
        m.set(0, col - 1, cur + 1);
    }
    Ok(m)
}

/// `t^{2k} - t^{p_k} - t^{2k-p_k} - 1`.
pub fn sharpness_polynomial(k: usize) -> Result<IntPolynomial> {
    check_k(k)?;
    let p = p_k(k);
    Ok(IntPolynomial::from_terms(&[(1, 2 * k), (-1, p), (-1, 2 * k - p), (-1, 0)]))
}

/// The polynomial whose normalized largest root is the conjectured minimum
/// at `k`: `t^{2k} - t^{k+1} - t^{k-1} - 1` (even `k`) or
/// `t^{2k} - t^{k+2} - t^{k-2} - 1` (odd `k`).
pub fn conjecture_polynomial(k: usize) -> Result<IntPolynomial> {
    check_k(k)?;
    let (a, b) = if k.is_multiple_of(2) { (k + 1, k - 1) } else { (k + 2, k - 2) };
    Ok(IntPolynomial::from_terms(&[(1, 2 * k), (-1, a), (-1, b), (-1, 0)]))
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct SharpnessExample {
    pub k: usize,
    pub p_k: usize,
    pub q_k: usize,
    pub matrix: IntMatrix,
    pub char_poly: IntPolynomial,
    pub char_poly_matches: bool,
    pub primitivity: PrimitivityReport,
    pub in_glnz: bool,
    pub skew_up_to_cyclotomic: bool,
    pub parity_ok: bool,
    pub normalized: EnclosureJson,
    /// `P_k > 3 + 2√2`, certified by disjoint enclosures.
    pub above_silver_squared: bool,
    #[serde(skip)]
    pub root: RootEnclosure,
    #[serde(skip)]
    pub normalized_value: ValueEnclosure,
}

impl SharpnessExample {
    pub fn all_checks_pass(&self) -> bool {
        self.char_poly_matches
            && self.primitivity.primitive
            && self.in_glnz
            && self.skew_up_to_cyclotomic
            && self.parity_ok
            && self.above_silver_squared
    }
}

pub fn build_example(k: usize, tol: Tolerance) -> Result<SharpnessExample> {
    let matrix = sharpness_matrix(k)?;
    let expected = sharpness_polynomial(k)?;
    let char_poly = matrix.char_poly();
    let root = largest_real_root(&char_poly, tol)?;
    let normalized_value = root.pow(2 * k as u32);
    Ok(SharpnessExample {
        k,
        p_k: p_k(k),
        q_k: q_k(k),
        char_poly_matches: char_poly == expected,
        primitivity: matrix.primitivity(),
        in_glnz: matrix.in_glnz(),
        skew_up_to_cyclotomic: is_skew_reciprocal_up_to_cyclotomic(&char_poly),
        parity_ok: parity_condition(&char_poly),
        normalized: normalized_value.to_json(),
        above_silver_squared: compare_normalized_to_silver_squared(&root, 2 * k)?
            == Ordering::Greater,
        matrix,
        char_poly,
        root,
        normalized_value,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceRow {
    pub k: usize,
    pub p_k: usize,
    pub normalized: EnclosureJson,
    /// `|P - (P^{1/2k} + P^{-1/2k})·P^{1/2} - 1|` for even `k`, and
    /// `|P - (P^{1/k} + P^{-1/k})·P^{1/2} - 1|` for odd `k`, evaluated
    /// exactly at the midpoint of a root enclosure tight enough for the
    /// residual to be meaningful at `tol`.
    pub residual: f64,
    pub residual_ok: bool,
    pub above_silver_squared: bool,
    #[serde(skip)]
    pub root: RootEnclosure,
}

/// One row from the polynomial alone; no matrix is built, so large `k`
/// stays cheap.
pub fn convergence_row(k: usize, tol: Tolerance) -> Result<ConvergenceRow> {
    let poly = sharpness_polynomial(k)?;
    let n = 2 * k;
    // |χ(mid)| ≤ |χ'|·width/2 and |χ'| ≲ 2k·P·4 near the root
    let extra = (8 * n as u64).next_power_of_two().trailing_zeros() + 4;
    let root = largest_real_root(&poly, tol.tighten(extra))?;
    let mid = root.midpoint().to_rational();
    let residual = poly.eval_rational(&mid).abs();
    let residual_f = residual.to_f64().unwrap_or(f64::INFINITY);
    let tol_r = BigRational::new(BigInt::one(), BigInt::one() << tol.bits());
    let coarse = root.refine(tol)?;
    Ok(ConvergenceRow {
        k,
        p_k: p_k(k),
        normalized: root.pow(n as u32).to_json(),
        residual: residual_f,
        residual_ok: residual < tol_r,
        above_silver_squared: compare_normalized_to_silver_squared(&coarse, n)? == Ordering::Greater,
        root,
    })
}

/// `P_k` for `k = 2..=k_max`, in order of `k`.
pub fn convergence_table(k_max: usize, tol: Tolerance) -> Result<Vec<ConvergenceRow>> {
    check_k(k_max)?;
    (2..=k_max)
        .into_par_iter()
        .map(|k| convergence_row(k, tol))
        .collect()
}

/// `P_k < P_{k-2}`, i.e. the same-parity distance to `3 + 2√2` shrinks
/// (every `P_k` lies above it). `None` when refinement cannot separate them.
pub fn same_parity_decrease(rows: &[ConvergenceRow], k: usize) -> Result<Option<bool>> {
    let find = |k: usize| rows.iter().find(|r| r.k == k);
    let (Some(cur), Some(prev)) = (find(k), find(k.wrapping_sub(2))) else {
        return Err(Error::InvalidArgument(format!("rows for k = {k} and k - 2 required")));
    };
    let o = order_powers(&cur.root, 2 * k as u32, &prev.root, 2 * (k - 2) as u32, 10)?;
    Ok(o.map(|o| o == Ordering::Less))
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureValue {
    pub k: usize,
    pub polynomial: IntPolynomial,
    pub normalized: EnclosureJson,
    /// Same polynomial as the sharpness example, hence the same value.
    pub equals_sharpness_value: bool,
}

pub fn verify_conjecture_values(k_max: usize, tol: Tolerance) -> Result<Vec<ConjectureValue>> {
    check_k(k_max)?;
    (2..=k_max)
        .into_par_iter()
        .map(|k| {
            let c = conjecture_polynomial(k)?;
            let s = sharpness_polynomial(k)?;
            let root = largest_real_root(&c, tol)?;
            let equal = c == s || root.same_root(&largest_real_root(&s, tol)?)?;
            Ok(ConjectureValue {
                k,
                normalized: root.pow(2 * k as u32).to_json(),
                polynomial: c,
                equals_sharpness_value: equal,
            })
        })
        .collect()
}
