//! Exact univariate polynomials over the integers, and the root machinery
//! built on top of them.
//!
//! Coefficients are stored low degree first with trailing zeros trimmed, so
//! the zero polynomial is the empty vector and `degree()` is `None` for it.

mod cyclotomic;
mod dyadic;
pub mod numeric;
mod roots;
mod sturm;

pub use cyclotomic::{cyclotomic, divisors, euler_phi, mobius};
pub use dyadic::{format_significant, Dyadic, Tolerance};
pub(crate) use roots::reciprocal_sign;
pub use roots::{
    compare_roots, largest_real_root, order_powers, real_roots_in_interval, unit_circle_root_count, Certainty,
    EnclosureJson, RootEnclosure, ValueEnclosure, DISPLAY_DIGITS, UNIT_CIRCLE_TOL,
};
pub use sturm::SturmChain;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Result of dividing over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalDivision {
    pub quotient: Vec<BigRational>,
    pub remainder: Vec<BigRational>,
    /// True when every coefficient of quotient and remainder is an integer.
    pub exact: bool,
}

impl RationalDivision {
    /// Integer quotient and remainder, when the division stayed in ℤ[t].
    pub fn into_integer(self) -> Option<(IntPolynomial, IntPolynomial)> {
        if !self.exact {
            return None;
        }
        let lift = |v: Vec<BigRational>| {
            IntPolynomial::new(v.into_iter().map(|c| c.to_integer()).collect())
        };
        Some((lift(self.quotient), lift(self.remainder)))
    }

    pub fn remainder_is_zero(&self) -> bool {
        self.remainder.iter().all(Zero::is_zero)
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Builds from machine integers, low degree first.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c·t^d`.
    pub fn monomial(c: impl Into<BigInt>, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c.into();
        Self::new(coeffs)
    }

    /// Sparse constructor from `(coefficient, exponent)` terms; repeated
    /// exponents accumulate.
    pub fn from_terms(terms: &[(i64, usize)]) -> Self {
        let top = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); top + 1];
        for &(c, e) in terms {
            coeffs[e] += c;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, treating the zero polynomial as an error.
    pub fn checked_degree(&self) -> Result<usize> {
        self.degree().ok_or(Error::ZeroPolynomial)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `p(x)` with a single normalization at the end.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let d = self.coeffs.len().saturating_sub(1);
        let num = self.homogeneous_at(x.numer(), x.denom());
        BigRational::new(num, num_traits::pow(x.denom().clone(), d))
    }

    /// Sign of `p(num/den)` for `den > 0`, using only integer arithmetic.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> Ordering {
        debug_assert!(den.is_positive());
        self.homogeneous_at(num, den).sign_ordering()
    }

    /// `den^deg · p(num/den) = Σ c_i num^i den^(deg-i)`.
    fn homogeneous_at(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for (k, c) in self.coeffs.iter().rev().enumerate() {
            if k == 0 {
                acc = c.clone();
            } else {
                den_pow *= den;
                acc = acc * num + c * &den_pow;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// `t^deg · p(1/t)`; drops trailing factors of `t` as a side effect.
    pub fn reversal(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `p(-t)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(t^k)`.
    pub fn inflate(&self, k: usize) -> Self {
        assert!(k > 0);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| if g.is_one() { g } else { g.gcd(c) })
    }

    /// Content-free part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Same as [`primitive_part`](Self::primitive_part) but never flips the
    /// sign; divides by the positive content only.
    pub fn positive_primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder: `lc(d)^(deg p - deg d + 1) · p = q·d + r`.
    pub fn pseudo_rem(&self, d: &Self) -> Result<Self> {
        let dd = d.checked_degree()?;
        let Some(dp) = self.degree() else {
            return Ok(Self::zero());
        };
        if dp < dd {
            return Ok(self.clone());
        }
        let lc = d.leading().expect("nonzero").clone();
        let mut r = self.clone();
        let mut steps = 0usize;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().expect("nonzero").clone();
            r = &r.scale(&lc) - &d.scale(&lr).shift(dr - dd);
            steps += 1;
        }
        let missing = (dp - dd + 1) - steps;
        if missing > 0 {
            r = r.scale(&num_traits::pow(lc, missing));
        }
        Ok(r)
    }

    /// Long division over ℚ.
    pub fn divrem(&self, d: &Self) -> Result<RationalDivision> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc = BigRational::from(d.leading().expect("nonzero").clone());
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let qlen = rem.len().saturating_sub(dd);
        let mut quot = vec![BigRational::zero(); qlen];
        for i in (0..qlen).rev() {
            let q = &rem[i + dd] / &lc;
            if !q.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * BigRational::from(dc.clone());
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        while quot.last().is_some_and(Zero::is_zero) {
            quot.pop();
        }
        let exact = quot.iter().chain(rem.iter()).all(BigRational::is_integer);
        Ok(RationalDivision {
            quotient: quot,
            remainder: rem,
            exact,
        })
    }

    /// Integer long division when every step divides exactly; `None` as soon
    /// as a step leaves ℤ.
    fn try_integer_division(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lc = d.leading()?;
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().saturating_sub(dd);
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// `p / d` when `d` divides `p` in ℤ[t]; otherwise reports the remainder.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some((q, r)) = self.try_integer_division(d) {
            if r.is_zero() {
                return Ok(q);
            }
        }
        let div = self.divrem(d)?;
        let remainder = if div.remainder_is_zero() {
            // divisible over ℚ but the quotient is not integral
            format!("0 (non-integral quotient {})", format_rational_coeffs(&div.quotient))
        } else {
            format_rational_coeffs(&div.remainder)
        };
        Err(Error::InexactDivision { remainder })
    }

    /// Divides out `d` as often as it goes; returns the cofactor and the
    /// multiplicity.
    pub fn divide_out(&self, d: &Self) -> (Self, u32) {
        let mut cur = self.clone();
        let mut k = 0;
        if d.is_constant() {
            return (cur, 0);
        }
        while let Some((q, r)) = cur.try_integer_division(d) {
            if !r.is_zero() || cur.is_zero() {
                break;
            }
            cur = q;
            k += 1;
        }
        (cur, k)
    }

    /// Primitive gcd in ℤ[t] (positive leading coefficient), times the gcd
    /// of the contents.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("b nonzero");
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&content)
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn square_free_part(&self) -> Result<Self> {
        let d = self.checked_degree()?;
        let pp = self.primitive_part();
        if d == 0 {
            return Ok(pp);
        }
        let g = pp.gcd(&pp.derivative()).primitive_part();
        Ok(pp.div_exact(&g).expect("gcd divides").primitive_part())
    }

    /// Yun's square-free decomposition of the primitive part:
    /// `pp(p) = Π a_i^i`, returned as `(a_i, i)` with `a_i` nonconstant.
    pub fn square_free_decomposition(&self) -> Result<Vec<(Self, u32)>> {
        let d = self.checked_degree()?;
        let mut out = Vec::new();
        if d == 0 {
            return Ok(out);
        }
        let p = self.primitive_part();
        let dp = p.derivative();
        let a0 = p.gcd(&dp).primitive_part();
        let mut b = p.div_exact(&a0).expect("gcd divides");
        let mut c = dp.div_exact(&a0).expect("gcd divides");
        let mut dcur = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&dcur).primitive_part();
            b = b.div_exact(&a).expect("gcd divides");
            c = dcur.div_exact(&a).expect("gcd divides");
            dcur = &c - &b.derivative();
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        Ok(out)
    }

    /// gcd of the exponents carrying a nonzero coefficient, excluding 0.
    /// Zero when the polynomial is constant.
    pub fn exponent_gcd(&self) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .fold(0usize, |g, (i, _)| g.gcd(&i))
    }

    /// Trace polynomial of a palindromic even-degree polynomial:
    /// the `r` with `p(t) = t^g · r(t + 1/t)`.
    pub(crate) fn trace_polynomial(&self) -> Option<Self> {
        let d = self.degree()?;
        if d % 2 == 1 {
            return None;
        }
        let g = d / 2;
        for j in 0..=d {
            if self.coeffs[j] != self.coeffs[d - j] {
                return None;
            }
        }
        // Dickson polynomials D_j(x) = x^j + x^-j in terms of x = t + 1/t
        let x = Self::monomial(1, 1);
        let mut dickson = vec![Self::constant(BigInt::from(2)), x.clone()];
        for j in 2..=g {
            let next = &(&x * &dickson[j - 1]) - &dickson[j - 2];
            dickson.push(next);
        }
        let mut r = Self::constant(self.coeffs[g].clone());
        for (j, dj) in dickson.iter().enumerate().take(g + 1).skip(1) {
            r = &r + &dj.scale(&self.coeffs[g + j]);
        }
        Some(r)
    }

    /// Renders the polynomial in `var`, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self> {
        let coeffs = json
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::parse(format!("coeffs[{i}]"), e))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    /// Parses the `{"coeffs": [...]}` wire form. Bare JSON integers are
    /// accepted alongside decimal strings.
    pub fn parse_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::parse("poly", e))?;
        let arr = value
            .get("coeffs")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::parse("coeffs", "expected an array"))?;
        let coeffs = arr
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let field = format!("coeffs[{i}]");
                match v {
                    serde_json::Value::String(s) => {
                        s.trim().parse::<BigInt>().map_err(|e| Error::parse(&field, e))
                    }
                    serde_json::Value::Number(n) if n.is_i64() => {
                        Ok(BigInt::from(n.as_i64().expect("checked")))
                    }
                    _ => Err(Error::parse(field, "expected a decimal integer string")),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

fn format_rational_coeffs(v: &[BigRational]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

/// Wire form: decimal strings, low degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl PartialOrd for IntPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by degree, then coefficients from the top down.
impl Ord for IntPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = PolyJson::deserialize(d)?;
        IntPolynomial::from_json(&json).map_err(serde::de::Error::custom)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

/// Which of the four basic operations [`poly_arith`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    DivRem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithResult {
    Poly(IntPolynomial),
    DivRem(RationalDivision),
}

pub fn poly_arith(p: &IntPolynomial, q: &IntPolynomial, op: ArithOp) -> Result<ArithResult> {
    Ok(match op {
        ArithOp::Add => ArithResult::Poly(p + q),
        ArithOp::Sub => ArithResult::Poly(p - q),
        ArithOp::Mul => ArithResult::Poly(p * q),
        ArithOp::DivRem => ArithResult::DivRem(p.divrem(q)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn golden_times_cyclotomic() {
        // (t^2 - t - 1)(t^2 + t + 1) = t^4 - t^2 - 2t - 1
        assert_eq!(&p(&[-1, -1, 1]) * &p(&[1, 1, 1]), p(&[-1, -2, -1, 0, 1]));
        assert_eq!(&p(&[-1, -1, 1]) * &IntPolynomial::one(), p(&[-1, -1, 1]));
    }

    #[test]
    fn divrem_exact_case() {
        let div = p(&[-1, -1, 0, -1, 1]).divrem(&p(&[1, 0, 1])).unwrap();
        assert!(div.exact);
        let (q, r) = div.into_integer().unwrap();
        assert_eq!(q, p(&[-1, -1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_rational_case() {
        let div = p(&[1, 0, 1]).divrem(&p(&[1, 2])).unwrap();
        assert!(!div.exact);
        // t^2 + 1 = (t/2 - 1/4)(2t + 1) + 5/4
        assert_eq!(div.remainder, vec![BigRational::new(5.into(), 4.into())]);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(p(&[1, 1]).divrem(&IntPolynomial::zero()), Err(Error::DivisionByZero));
        assert!(matches!(p(&[1]).div_exact(&p(&[])), Err(Error::DivisionByZero)));
    }

    #[test]
    fn div_exact_reports_remainder() {
        // (t^6 - t^5 - t - 1) mod (t^2 + 1) = -2t - 2
        let err = p(&[-1, -1, 0, 0, 0, -1, 1]).div_exact(&p(&[1, 0, 1])).unwrap_err();
        assert_eq!(
            err,
            Error::InexactDivision {
                remainder: "[-2, -2]".into()
            }
        );
    }

    #[test]
    fn gcd_and_square_free() {
        let a = p(&[-1, -1, 1]);
        let b = p(&[1, 1]);
        let prod = &(&a * &a) * &b;
        assert_eq!(prod.gcd(&prod.derivative()), a);
        assert_eq!(prod.square_free_part().unwrap(), &a * &b);
        let dec = prod.square_free_decomposition().unwrap();
        assert_eq!(dec, vec![(b, 1), (a, 2)]);
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[3, -2, 0, 5]);
        let d = p(&[1, 2]);
        let r = a.pseudo_rem(&d).unwrap();
        // lc(d)^(3-1+1) a - r must be divisible by d
        let lhs = &a.scale(&BigInt::from(8)) - &r;
        assert!(lhs.divrem(&d).unwrap().remainder_is_zero());
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn display_and_json() {
        let q = p(&[-1, -2, -1, 0, 1]);
        assert_eq!(q.to_string(), "t^4 - t^2 - 2t - 1");
        let text = serde_json::to_string(&q).unwrap();
        assert_eq!(text, r#"{"coeffs":["-1","-2","-1","0","1"]}"#);
        assert_eq!(IntPolynomial::parse_json(&text).unwrap(), q);
        assert!(matches!(
            IntPolynomial::parse_json(r#"{"coeffs":["1","x"]}"#),
            Err(Error::Parse { field, .. }) if field == "coeffs[1]"
        ));
    }

    #[test]
    fn trace_polynomial_of_palindrome() {
        // t^4 - t^3 - t^2 - t + 1 = t^2 ((x^2 - 2) - x - 1), x = t + 1/t
        let r = p(&[1, -1, -1, -1, 1]).trace_polynomial().unwrap();
        assert_eq!(r, p(&[-3, -1, 1]));
        assert!(p(&[1, 2, 1, 1]).trace_polynomial().is_none());
    }

    #[test]
    fn exponent_gcd_detects_inflation() {
        assert_eq!(p(&[-1, 0, -2, 0, 1]).exponent_gcd(), 2);
        assert_eq!(p(&[-1, -1, 0, -1, 1]).exponent_gcd(), 1);
        assert_eq!(p(&[5]).exponent_gcd(), 0);
    }
}
