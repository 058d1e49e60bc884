use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::dyadic::format_significant;
use super::{numeric, Dyadic, IntPolynomial, SturmChain, Tolerance};
use crate::error::{Error, Result};

/// A certified isolating interval `(lo, hi]` for one real root of
/// `polynomial`. The square-free part changes sign across the interval, or
/// `hi` is itself the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEnclosure {
    pub lo: Dyadic,
    pub hi: Dyadic,
    pub polynomial: IntPolynomial,
}

/// An interval `[lo, hi]` around a derived real quantity, e.g. a power of a
/// root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueEnclosure {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnclosureJson {
    pub lo: String,
    pub hi: String,
    pub decimal: String,
}

/// Significant digits used for every rendered certified value.
pub const DISPLAY_DIGITS: u32 = 10;

fn render(lo: &Dyadic, hi: &Dyadic) -> EnclosureJson {
    let mid = lo.midpoint(hi).to_rational();
    EnclosureJson {
        lo: lo.to_wire(),
        hi: hi.to_wire(),
        decimal: format_significant(&mid, DISPLAY_DIGITS),
    }
}

impl ValueEnclosure {
    pub fn midpoint_f64(&self) -> f64 {
        self.lo.midpoint(&self.hi).to_f64()
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn contains_f64(&self, x: f64, slack: f64) -> bool {
        self.lo.to_f64() - slack <= x && x <= self.hi.to_f64() + slack
    }

    /// Strict order certified by disjointness.
    pub fn certainly_below(&self, other: &ValueEnclosure) -> bool {
        self.hi < other.lo
    }

    pub fn decimal(&self) -> String {
        render(&self.lo, &self.hi).decimal
    }

    pub fn to_json(&self) -> EnclosureJson {
        render(&self.lo, &self.hi)
    }
}

impl Serialize for ValueEnclosure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl Serialize for RootEnclosure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl RootEnclosure {
    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.midpoint(&self.hi)
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64()
    }

    pub fn decimal(&self) -> String {
        render(&self.lo, &self.hi).decimal
    }

    pub fn to_json(&self) -> EnclosureJson {
        render(&self.lo, &self.hi)
    }

    pub fn as_value(&self) -> ValueEnclosure {
        ValueEnclosure {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        }
    }

    /// Enclosure of `root^n` for a positive root (interval endpoints are
    /// clamped at zero).
    pub fn pow(&self, n: u32) -> ValueEnclosure {
        let zero = Dyadic::from_int(0);
        let lo = if self.lo.is_negative() { zero.clone() } else { self.lo.clone() };
        let hi = if self.hi.is_negative() { zero } else { self.hi.clone() };
        ValueEnclosure {
            lo: lo.pow(n),
            hi: hi.pow(n),
        }
    }

    /// Distinct real roots of the polynomial in `(lo, hi]`; 1 for every
    /// enclosure this module hands out.
    pub fn sturm_count(&self) -> Result<usize> {
        Ok(SturmChain::new(&self.polynomial)?.count_dyadic(&self.lo, &self.hi))
    }

    /// Narrows the enclosure to width `≤ tol` by further bisection.
    pub fn refine(&self, tol: Tolerance) -> Result<RootEnclosure> {
        let sf = match descartes_single(&self.polynomial) {
            Some(q) if !self.lo.is_negative() => q,
            _ => self.polynomial.square_free_part()?,
        };
        let (lo, hi) = sign_bisect(&sf, self.lo.clone(), self.hi.clone(), tol);
        Ok(RootEnclosure {
            lo,
            hi,
            polynomial: self.polynomial.clone(),
        })
    }

    /// Exact test that both enclosures isolate the same real number: the
    /// gcd of the two polynomials must vanish on the overlap.
    pub fn same_root(&self, other: &RootEnclosure) -> Result<bool> {
        let lo = (&self.lo).max(&other.lo);
        let hi = (&self.hi).min(&other.hi);
        if lo >= hi {
            // (lo, hi] intervals with empty overlap
            return Ok(false);
        }
        let g = self.polynomial.gcd(&other.polynomial);
        if g.is_constant() {
            return Ok(false);
        }
        Ok(SturmChain::new(&g)?.count_dyadic(lo, hi) >= 1)
    }
}

/// Halves `(lo, hi]` until its width is at most `tol`, keeping the single
/// root of the square-free `sf` inside. Requires `sf(lo) ≠ 0` and exactly
/// one root of `sf` in `(lo, hi]`.
fn sign_bisect(sf: &IntPolynomial, mut lo: Dyadic, mut hi: Dyadic, tol: Tolerance) -> (Dyadic, Dyadic) {
    let s_lo = sf.sign_at(lo.mantissa(), &lo.denominator());
    debug_assert_ne!(s_lo, Ordering::Equal);
    while !hi.sub(&lo).at_most_pow2_neg(tol.bits()) {
        let mid = lo.midpoint(&hi);
        let s = sf.sign_at(mid.mantissa(), &mid.denominator());
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Certified enclosure of the largest real root: plain bisection from the
/// Cauchy bound, using Sturm counts until the root is isolated and sign
/// changes of the square-free part afterwards.
///
/// When the coefficients (after removing powers of `t`) have exactly one
/// sign variation, Descartes' rule gives a unique positive root, which is
/// then the largest real root and is found by sign bisection on
/// `(0, bound]` without building a Sturm chain. This keeps sparse
/// high-degree inputs cheap.
pub fn largest_real_root(p: &IntPolynomial, tol: Tolerance) -> Result<RootEnclosure> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::NoRealRoot);
    }
    if let Some(q) = descartes_single(p) {
        let (lo, hi) = sign_bisect(&q, Dyadic::from_int(0), Dyadic::from_int(q.cauchy_bound()), tol);
        return Ok(RootEnclosure {
            lo,
            hi,
            polynomial: p.clone(),
        });
    }
    let sturm = SturmChain::new(p)?;
    let sf = sturm.square_free();
    let bound = Dyadic::from_int(p.cauchy_bound());
    let mut lo = bound.neg();
    let mut hi = bound;
    let mut v_lo = sturm.variations_at_dyadic(&lo);
    let v_hi = sturm.variations_at_dyadic(&hi);
    if v_lo <= v_hi {
        return Err(Error::NoRealRoot);
    }
    loop {
        let isolated = v_lo - v_hi == 1;
        if isolated && sf.sign_at(lo.mantissa(), &lo.denominator()) != Ordering::Equal {
            break;
        }
        let mid = lo.midpoint(&hi);
        let v_mid = sturm.variations_at_dyadic(&mid);
        if v_mid > v_hi {
            lo = mid;
            v_lo = v_mid;
        } else {
            hi = mid;
            // the right end never changes its count: no root in (mid, old hi]
        }
    }
    let (lo, hi) = sign_bisect(sf, lo, hi, tol);
    Ok(RootEnclosure {
        lo,
        hi,
        polynomial: p.clone(),
    })
}

/// `p / t^m` with `t ∤ p / t^m`, when its coefficients have exactly one
/// sign variation (so it has exactly one positive root, a simple one).
pub(crate) fn descartes_single(p: &IntPolynomial) -> Option<IntPolynomial> {
    let c = p.coeffs();
    let first = c.iter().position(|x| !x.is_zero())?;
    let mut variations = 0;
    let mut last = None;
    for x in &c[first..] {
        if x.is_zero() {
            continue;
        }
        let s = x.sign();
        if last.is_some_and(|l| l != s) {
            variations += 1;
        }
        last = Some(s);
    }
    (variations == 1).then(|| IntPolynomial::new(c[first..].to_vec()))
}

/// Number of distinct real roots in `(a, b]`.
pub fn real_roots_in_interval(p: &IntPolynomial, a: &BigRational, b: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Err(Error::InvalidArgument(format!("empty interval ({a}, {b}]")));
    }
    Ok(SturmChain::new(p)?.count_rational(a, b))
}

/// Exact order of two real algebraic numbers given by enclosures.
pub fn compare_roots(a: &RootEnclosure, b: &RootEnclosure) -> Result<Ordering> {
    if a.same_root(b)? {
        return Ok(Ordering::Equal);
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let mut bits = a.width().exp().max(b.width().exp()).max(8);
    loop {
        if a.hi <= b.lo {
            // a ≤ a.hi ≤ b.lo < b
            return Ok(Ordering::Less);
        }
        if b.hi <= a.lo {
            return Ok(Ordering::Greater);
        }
        bits += 8;
        a = a.refine(Tolerance::from_bits(bits))?;
        b = b.refine(Tolerance::from_bits(bits))?;
    }
}

/// Order of `a^na` against `b^nb` for positive roots, certified by
/// disjoint power intervals. Each round refines both roots by `2^-8`;
/// `None` when `rounds` refinements do not separate them (equal values
/// never separate).
pub fn order_powers(
    a: &RootEnclosure,
    na: u32,
    b: &RootEnclosure,
    nb: u32,
    rounds: u32,
) -> Result<Option<Ordering>> {
    let mut a = a.clone();
    let mut b = b.clone();
    let mut bits = a.width().exp().max(b.width().exp());
    for round in 0..=rounds {
        let va = a.pow(na);
        let vb = b.pow(nb);
        if va.hi <= vb.lo {
            return Ok(Some(Ordering::Less));
        }
        if vb.hi <= va.lo {
            return Ok(Some(Ordering::Greater));
        }
        if round < rounds {
            bits += 8;
            a = a.refine(Tolerance::from_bits(bits))?;
            b = b.refine(Tolerance::from_bits(bits))?;
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Certainty {
    Exact,
    Numeric,
}

/// Modulus tolerance of the numeric fallback.
pub const UNIT_CIRCLE_TOL: f64 = 1e-9;

/// Roots on `|z| = 1`, counted with multiplicity.
///
/// Reciprocal inputs are handled exactly: factors `t ∓ 1` are divided out,
/// the even palindromic cofactor is written as `t^g·r(t + 1/t)`, and every
/// real root of `r` in `(-2, 2)` of multiplicity `k` contributes a conjugate
/// pair of unit roots of multiplicity `k`. Anything else goes through the
/// numeric root finder and is flagged as such.
pub fn unit_circle_root_count(p: &IntPolynomial) -> Result<(usize, Certainty)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.constant_term().is_zero() {
        return Err(Error::VanishesAtZero);
    }
    if reciprocal_sign(p).is_some() {
        let minus_one = IntPolynomial::from_coeffs(&[-1, 1]);
        let plus_one = IntPolynomial::from_coeffs(&[1, 1]);
        let (q, m1) = p.divide_out(&minus_one);
        let (q, m2) = q.divide_out(&plus_one);
        let mut count = (m1 + m2) as usize;
        if !q.is_constant() {
            let r = q
                .trace_polynomial()
                .expect("reciprocal cofactor without ±1 roots is even palindromic");
            let lo = BigRational::from_integer(BigInt::from(-2));
            let hi = BigRational::from_integer(BigInt::from(2));
            for (f, mult) in r.square_free_decomposition()? {
                let inside = SturmChain::new(&f)?.count_rational(&lo, &hi);
                count += 2 * inside * mult as usize;
            }
        }
        return Ok((count, Certainty::Exact));
    }
    let roots = numeric::roots_with_multiplicity(p)?;
    let count = roots
        .iter()
        .filter(|(z, _)| (z.norm() - 1.0).abs() < UNIT_CIRCLE_TOL)
        .map(|(_, m)| *m as usize)
        .sum();
    Ok((count, Certainty::Numeric))
}

/// `ε` with `c_j = ε·c_{m-j}` for all `j`, if any.
pub(crate) fn reciprocal_sign(p: &IntPolynomial) -> Option<i8> {
    let c = p.coeffs();
    let m = c.len().checked_sub(1)?;
    [1i8, -1].into_iter().find(|&eps| {
        (0..=m).all(|j| {
            if eps == 1 {
                c[j] == c[m - j]
            } else {
                c[j] == -&c[m - j]
            }
        })
    })
}
