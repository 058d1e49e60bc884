use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use super::IntPolynomial;
use crate::error::{Error, Result};

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i8 {
    let f = prime_factors(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `t^d - 1`
fn binomial_minus_one(d: usize) -> IntPolynomial {
    let mut c = vec![BigInt::from(0); d + 1];
    c[0] = BigInt::from(-1);
    c[d] = BigInt::one();
    IntPolynomial::new(c)
}

/// The m-th cyclotomic polynomial, as `Π_{d|m} (t^d - 1)^μ(m/d)`: the
/// factors with μ = +1 are multiplied up, then the μ = -1 factors are
/// divided out exactly.
///
/// Results are memoized process-wide; the cyclotomic stripping loop asks for
/// the same small indices over and over.
pub fn cyclotomic(m: u64) -> Result<IntPolynomial> {
    if m == 0 {
        return Err(Error::InvalidArgument("cyclotomic index must be ≥ 1".into()));
    }
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().expect("cache lock").get(&m) {
        return Ok(p.clone());
    }
    let p = compute_cyclotomic(m)?;
    cache.write().expect("cache lock").insert(m, p.clone());
    Ok(p)
}

static CACHE: OnceLock<RwLock<HashMap<u64, IntPolynomial>>> = OnceLock::new();

fn compute_cyclotomic(m: u64) -> Result<IntPolynomial> {
    let divs = divisors(m);
    let mut num = IntPolynomial::one();
    for &d in &divs {
        if mobius(m / d) == 1 {
            num = &num * &binomial_minus_one(d as usize);
        }
    }
    for &d in &divs {
        if mobius(m / d) == -1 {
            num = num.div_exact(&binomial_minus_one(d as usize))?;
        }
    }
    Ok(num)
}
