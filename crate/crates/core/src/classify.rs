//! Reciprocity, skew-reciprocity and skew-reciprocity up to cyclotomic
//! factors, plus the coefficient parity test and a few number-theoretic
//! helpers about square roots and Salem-type polynomials.
//!
//! Conventions:
//! * reciprocal with sign ε: `c_j = ε·c_{m-j}` for all `j`;
//! * skew-reciprocal with sign ε: `m` even and `c_j = ε·(-1)^j·c_{m-j}`;
//! * the cyclotomic part is the largest product of cyclotomic polynomials
//!   dividing the input; the rest is the *core*.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{self, cyclotomic, euler_phi, IntPolynomial, RootEnclosure, Tolerance};

pub fn is_reciprocal(p: &IntPolynomial) -> Result<Option<i8>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(poly::reciprocal_sign(p))
}

pub fn is_skew_reciprocal(p: &IntPolynomial) -> Result<Option<i8>> {
    let m = p.checked_degree()?;
    if p.constant_term().is_zero() {
        return Err(Error::VanishesAtZero);
    }
    if m % 2 == 1 {
        return Ok(None);
    }
    let c = p.coeffs();
    let holds = |eps: i8| {
        (0..=m).all(|j| {
            let flip = (eps == -1) ^ (j % 2 == 1);
            if flip {
                c[j] == -&c[m - j]
            } else {
                c[j] == c[m - j]
            }
        })
    };
    Ok([1i8, -1].into_iter().find(|&e| holds(e)))
}

/// Largest `m` worth trying for a degree-`d` input: `φ(m) ≥ √(m/2)`, so
/// `φ(m) ≤ d` forces `m ≤ 2d²`.
fn cyclotomic_search_bound(d: usize) -> u64 {
    2 * (d as u64) * (d as u64)
}

/// Cyclotomic factors `(m, multiplicity)` of `p`, ascending in `m`, and the
/// cyclotomic-free cofactor.
pub fn cyclotomic_factors(p: &IntPolynomial) -> Result<(Vec<(u64, u32)>, IntPolynomial)> {
    let d = p.checked_degree()?;
    if p.constant_term().is_zero() {
        return Err(Error::VanishesAtZero);
    }
    let mut rest = p.clone();
    let mut found = Vec::new();
    let bound = cyclotomic_search_bound(d);
    for m in 1..=bound {
        let remaining = rest.degree().unwrap_or(0);
        if remaining == 0 {
            break;
        }
        if euler_phi(m) as usize > remaining {
            continue;
        }
        let phi_m = cyclotomic(m)?;
        let (q, k) = rest.divide_out(&phi_m);
        if k > 0 {
            found.push((m, k));
            rest = q;
        }
    }
    Ok((found, rest))
}

/// Splits `p = cyclotomic_part · core` with the cyclotomic part maximal.
pub fn strip_cyclotomic(p: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
    let (factors, core) = cyclotomic_factors(p)?;
    let mut part = IntPolynomial::one();
    for (m, k) in factors {
        part = &part * &cyclotomic(m)?.pow(k);
    }
    Ok((part, core))
}

pub fn is_skew_reciprocal_up_to_cyclotomic(p: &IntPolynomial) -> bool {
    if p.is_zero() || p.constant_term().is_zero() {
        return false;
    }
    match strip_cyclotomic(p) {
        Ok((_, core)) => matches!(is_skew_reciprocal(&core), Ok(Some(_))),
        Err(_) => false,
    }
}

/// `c_d + c_{k-d}` even for every `d`.
pub fn parity_condition(p: &IntPolynomial) -> bool {
    let Some(k) = p.degree() else {
        return false;
    };
    let c = p.coeffs();
    (0..=k).all(|d| (&c[d] + &c[k - d]).is_even())
}

trait IsEven {
    fn is_even(&self) -> bool;
}

impl IsEven for BigInt {
    fn is_even(&self) -> bool {
        num_integer::Integer::is_even(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralClass {
    pub polynomial: IntPolynomial,
    pub reciprocal: Option<i8>,
    pub skew_reciprocal: Option<i8>,
    pub cyclotomic_part: IntPolynomial,
    /// Indices `m` of the cyclotomic factors `Φ_m`, with multiplicity.
    pub cyclotomic_factors: Vec<(u64, u32)>,
    pub core: IntPolynomial,
    pub skew_up_to_cyclotomic: bool,
    pub parity_ok: bool,
    /// Purely cyclotomic input: skew-reciprocal only vacuously.
    pub degenerate: bool,
}

/// All predicates at once. Inputs vanishing at 0 are classified as failing
/// every involution-based predicate, with trivial cyclotomic part.
pub fn classify(p: &IntPolynomial) -> Result<SpectralClass> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let reciprocal = is_reciprocal(p)?;
    let parity_ok = parity_condition(p);
    if p.constant_term().is_zero() {
        return Ok(SpectralClass {
            polynomial: p.clone(),
            reciprocal,
            skew_reciprocal: None,
            cyclotomic_part: IntPolynomial::one(),
            cyclotomic_factors: Vec::new(),
            core: p.clone(),
            skew_up_to_cyclotomic: false,
            parity_ok,
            degenerate: false,
        });
    }
    let skew_reciprocal = is_skew_reciprocal(p)?;
    let (factors, core) = cyclotomic_factors(p)?;
    let mut cyclotomic_part = IntPolynomial::one();
    for &(m, k) in &factors {
        cyclotomic_part = &cyclotomic_part * &cyclotomic(m)?.pow(k);
    }
    let skew_up_to_cyclotomic = is_skew_reciprocal(&core)?.is_some();
    Ok(SpectralClass {
        polynomial: p.clone(),
        reciprocal,
        skew_reciprocal,
        cyclotomic_part,
        cyclotomic_factors: factors,
        degenerate: core.is_constant(),
        core,
        skew_up_to_cyclotomic,
        parity_ok,
    })
}

/// `x⁴ - p·x² + q`, whose largest root is the square root of the largest
/// root `α` of `t² - p·t + q`, together with its irreducibility over ℚ.
pub fn sqrt_min_poly(p: i64, q: i64) -> Result<(IntPolynomial, bool)> {
    if p <= 0 {
        return Err(Error::InvalidArgument(format!("p must be positive, got {p}")));
    }
    let disc = (p as i128) * (p as i128) - 4 * (q as i128);
    if disc < 0 {
        return Err(Error::InvalidArgument(format!(
            "t^2 - {p}t + {q} has negative discriminant"
        )));
    }
    // α = (p + √disc)/2 > 1  ⇔  p > 2 or q < p - 1
    if !(p > 2 || q < p - 1) {
        return Err(Error::InvalidArgument(format!(
            "largest root of t^2 - {p}t + {q} is at most 1"
        )));
    }
    let quartic = IntPolynomial::from_coeffs(&[q, 0, -p, 0, 1]);
    Ok((quartic.clone(), quartic_is_irreducible(&quartic)))
}

/// Irreducibility over ℚ of a monic integer quartic: no rational root and
/// no split into two monic integer quadratics (Gauss's lemma makes monic
/// integer factors sufficient).
pub fn quartic_is_irreducible(f: &IntPolynomial) -> bool {
    assert_eq!(f.degree(), Some(4));
    assert!(f.is_monic());
    let c: Vec<i128> = f
        .coeffs()
        .iter()
        .map(|x| i128::try_from(x).expect("small coefficients"))
        .collect();
    let c0 = c[0];
    if c0 == 0 {
        return false;
    }
    let eval = |x: i128| c.iter().rev().fold(0i128, |acc, &a| acc * x + a);
    let divs: Vec<i128> = (1..=c0.abs()).filter(|d| c0 % d == 0).collect();
    if divs.iter().any(|&d| eval(d) == 0 || eval(-d) == 0) {
        return false;
    }
    // (x² + a x + b)(x² + e x + d): b d = c0, a + e = c3, b + d + a e = c2,
    // a d + b e = c1. With a fixed, everything else is determined.
    let (c1, c2, c3) = (c[1], c[2], c[3]);
    let a_bound = 2 * (c.iter().map(|x| x.abs()).max().unwrap_or(0) + 1).sqrt() + 2;
    for &bd in divs.iter().flat_map(|d| [*d, -*d]).collect::<Vec<_>>().iter() {
        let b = bd;
        let d = c0 / b;
        for a in -a_bound * a_bound..=a_bound * a_bound {
            let e = c3 - a;
            if b + d + a * e == c2 && a * d + b * e == c1 {
                return false;
            }
        }
    }
    true
}

/// Reciprocal with all roots but the pair `λ^{±1}` on the unit circle.
pub fn is_salem_like(p: &IntPolynomial) -> Result<bool> {
    let m = p.checked_degree()?;
    if m < 4 || is_reciprocal(p)?.is_none() {
        return Ok(false);
    }
    let (count, _) = poly::unit_circle_root_count(p)?;
    Ok(count == m - 2)
}

/// Largest real root of `p`, raised to the `n`-th power, rendered to ten
/// significant digits.
pub fn normalized_root_decimal(p: &IntPolynomial, n: u32, tol: Tolerance) -> Result<(RootEnclosure, String)> {
    let e = poly::largest_real_root(p, tol)?;
    let d = e.pow(n).decimal();
    Ok((e, d))
}

impl SpectralClass {
    pub fn is_skew_reciprocal(&self) -> bool {
        self.skew_reciprocal.is_some()
    }
}
