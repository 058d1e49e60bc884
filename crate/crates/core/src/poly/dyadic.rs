use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact dyadic rational `mantissa / 2^exp`, kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exp: u32) -> Self {
        let mut d = Dyadic { mantissa, exp };
        d.normalize();
        d
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic {
            mantissa: n.into(),
            exp: 0,
        }
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0).min(self.exp as u64) as u32;
        if tz > 0 {
            self.mantissa >>= tz;
            self.exp -= tz;
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn denominator(&self) -> BigInt {
        BigInt::one() << self.exp
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, u32) {
        let e = self.exp.max(other.exp);
        (
            &self.mantissa << (e - self.exp),
            &other.mantissa << (e - other.exp),
            e,
        )
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic::new(a - b, e)
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mantissa * &other.mantissa, self.exp + other.exp)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exp: self.exp,
        }
    }

    pub fn midpoint(&self, other: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic::new(a + b, e + 1)
    }

    pub fn pow(&self, n: u32) -> Dyadic {
        Dyadic::new(num_traits::pow(self.mantissa.clone(), n as usize), self.exp * n)
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), self.denominator())
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// True when `self ≤ 2^-bits` (for non-negative widths).
    pub fn at_most_pow2_neg(&self, bits: u32) -> bool {
        // mantissa / 2^exp ≤ 1 / 2^bits  ⇔  mantissa · 2^bits ≤ 2^exp
        let lhs = &self.mantissa << bits;
        lhs <= (BigInt::one() << self.exp)
    }

    /// Wire form `m/2^e`.
    pub fn to_wire(&self) -> String {
        format!("{}/2^{}", self.mantissa, self.exp)
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `m/2^e` or a plain integer.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once("/2^") {
            Some((m, e)) => {
                let m = m.parse::<BigInt>().map_err(|e| Error::parse("dyadic", e))?;
                let e = e.parse::<u32>().map_err(|e| Error::parse("dyadic", e))?;
                Ok(Dyadic::new(m, e))
            }
            None => Ok(Dyadic::from_int(
                s.parse::<BigInt>().map_err(|e| Error::parse("dyadic", e))?,
            )),
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire())
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (~{})", self.to_wire(), self.to_f64())
    }
}

/// An absolute width bound `2^-bits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tolerance {
    bits: u32,
}

impl Default for Tolerance {
    /// 2^-40, just below 1e-12.
    fn default() -> Self {
        Tolerance { bits: 40 }
    }
}

impl Tolerance {
    pub fn from_bits(bits: u32) -> Self {
        Tolerance { bits }
    }

    /// Smallest power of two bound not exceeding `tol`.
    pub fn from_f64(tol: f64) -> Result<Self> {
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "tolerance must be positive and finite, got {tol}"
            )));
        }
        let bits = (-tol.log2()).ceil().max(0.0) as u32;
        Ok(Tolerance { bits })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn as_f64(&self) -> f64 {
        (-(self.bits as f64)).exp2()
    }

    pub fn as_dyadic(&self) -> Dyadic {
        Dyadic::new(BigInt::one(), self.bits)
    }

    /// `2^-extra` times tighter.
    pub fn tighten(&self, extra: u32) -> Self {
        Tolerance {
            bits: self.bits + extra,
        }
    }
}

/// Renders a rational with `digits` significant decimal digits, rounding
/// half away from zero.
pub fn format_significant(x: &BigRational, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let ax = x.abs();
    // decimal exponent e with 10^e ≤ ax < 10^(e+1)
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut e: i64 = 0;
    let mut probe = ax.clone();
    while probe >= ten {
        probe /= &ten;
        e += 1;
    }
    while probe < BigRational::one() {
        probe *= &ten;
        e -= 1;
    }
    let shift = digits as i64 - 1 - e;
    let scaled = if shift >= 0 {
        ax * BigRational::from_integer(num_traits::pow(BigInt::from(10), shift as usize))
    } else {
        ax / BigRational::from_integer(num_traits::pow(BigInt::from(10), (-shift) as usize))
    };
    let two = BigInt::from(2);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let mut m = q;
    if r * &two >= *scaled.denom() {
        m += 1;
    }
    let mut shift = shift;
    if m.to_string().len() as u32 > digits {
        // rounding carried into a new digit
        m /= 10;
        shift -= 1;
    }
    let s = m.to_string();
    let body = if shift <= 0 {
        let zeros = "0".repeat((-shift) as usize);
        format!("{s}{zeros}")
    } else if (shift as usize) >= s.len() {
        let zeros = "0".repeat(shift as usize - s.len());
        format!("0.{zeros}{s}")
    } else {
        let cut = s.len() - shift as usize;
        format!("{}.{}", &s[..cut], &s[cut..])
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
