//! Independent oracles for the integration and acceptance suites. Nothing
//! here calls the algorithm it is used to check.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use stretch_lab::matrix::IntMatrix;
use stretch_lab::IntPolynomial;

pub const MU: f64 = 1.618_033_988_749_895;
pub const SIGMA2: f64 = 5.828_427_124_746_19;

pub fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_coeffs(c)
}

/// Characteristic polynomial `det(tI - A)` by Faddeev-LeVerrier over ℚ.
pub fn faddeev_leverrier(a: &IntMatrix) -> IntPolynomial {
    let n = a.n();
    let am: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(a.get(i, j).clone())).collect())
        .collect();
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &x[i][k] * &y[k][j]).sum())
                    .collect()
            })
            .collect()
    };
    // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&am, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        m = next;
        let am_k = mul(&am, &m);
        let tr: BigRational = (0..n).map(|i| am_k[i][i].clone()).sum();
        c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    IntPolynomial::new(c.into_iter().map(|x| x.to_integer()).collect())
}

/// Primitivity by brute force: some power `A^k`, `k ≤ (n - 1)² + 1`,
/// computed one multiplication at a time, is positive.
pub fn primitive_by_powers(a: &IntMatrix) -> bool {
    let n = a.n();
    let p: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| a.get(i, j).is_positive()).collect()).collect();
    let mut cur = p.clone();
    for _ in 0..(n - 1) * (n - 1) + 1 {
        if cur.iter().all(|r| r.iter().all(|&b| b)) {
            return true;
        }
        cur = (0..n)
            .map(|i| (0..n).map(|j| (0..n).any(|k| cur[i][k] && p[k][j])).collect())
            .collect();
    }
    cur.iter().all(|r| r.iter().all(|&b| b))
}

/// Largest real root in floating point, by scanning down from a Cauchy
/// bound for a sign change and bisecting.
pub fn f64_largest_root(p: &IntPolynomial) -> Option<f64> {
    let c: Vec<f64> = p.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
    let lead = *c.last()?;
    let bound = 1.0 + c.iter().rev().skip(1).map(|x| (x / lead).abs()).fold(0.0, f64::max);
    let eval = |x: f64| c.iter().rev().fold(0.0, |acc, &k| acc * x + k);
    let steps = 200_000;
    let h = 2.0 * bound / steps as f64;
    let mut hi = bound;
    let s_top = eval(hi).signum();
    for i in 1..=steps {
        let lo = bound - i as f64 * h;
        if eval(lo).signum() != s_top || eval(lo) == 0.0 {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if eval(m).signum() == s_top {
                    b = m;
                } else {
                    a = m;
                }
            }
            return Some(0.5 * (a + b));
        }
        hi = lo;
    }
    None
}

/// Rank over ℚ by fraction-free elimination on `i128`.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let (a, b) = (m[rank][c], m[i][c]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * a - m[rank][j] * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `t^g · s(t + ε/t)` for `s` of degree `g`, with `ε = 1` (reciprocal) or
/// `ε = -1` (skew-reciprocal).
pub fn substitute_trace(s: &[i64], eps: i64) -> IntPolynomial {
    let g = s.len() - 1;
    let mut out = IntPolynomial::zero();
    // (t + ε/t)^j t^g = Σ_i C(j,i) ε^i t^{g + j - 2i}
    for (j, &sj) in s.iter().enumerate() {
        for i in 0..=j {
            let coeff = BigInt::from(sj) * binom(j, i) * BigInt::from(eps.pow(i as u32));
            let term = IntPolynomial::monomial(coeff, g + j - 2 * i);
            out = &out + &term;
        }
    }
    out
}

fn binom(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Coefficients of a random degree-`g` polynomial with leading `±1`.
pub fn random_trace_poly(rng: &mut ChaCha8Rng, g: usize) -> Vec<i64> {
    let mut s: Vec<i64> = (0..g).map(|_| rng.gen_range(-4..=4)).collect();
    s.push(if rng.gen_bool(0.5) { 1 } else { -1 });
    s
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, max: i64) -> IntMatrix {
    let e: Vec<i64> = (0..n * n).map(|_| rng.gen_range(0..=max)).collect();
    IntMatrix::from_flat_i64(n, &e).unwrap()
}

/// All `n×n` matrices with entries in `{0, 1}`.
pub fn all_binary(n: usize) -> impl Iterator<Item = IntMatrix> {
    (0u64..1 << (n * n)).map(move |bits| {
        let e: Vec<i64> = (0..n * n).map(|k| ((bits >> k) & 1) as i64).collect();
        IntMatrix::from_flat_i64(n, &e).unwrap()
    })
}
