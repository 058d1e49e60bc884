use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Dyadic, IntPolynomial};
use crate::error::Result;

/// Sturm sequence of the square-free part, with every member reduced to its
/// primitive part (dividing by a positive content leaves sign variations
/// unchanged).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        let sf = p.square_free_part()?;
        let mut chain = vec![sf.clone()];
        if sf.is_constant() {
            return Ok(SturmChain { chain });
        }
        chain.push(sf.derivative().positive_primitive_part());
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            if b.is_constant() {
                break;
            }
            // lc(b)^(δ+1) a = q b + prem, so -rem(a, b) has the sign of
            // -sign(lc(b))^(δ+1) · prem
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(b)?;
            if r.is_zero() {
                break;
            }
            let lc_neg = b.leading().unwrap().is_negative();
            let flip = !(lc_neg && (delta + 1) % 2 == 1);
            let mut next = r.positive_primitive_part();
            if flip {
                next = -next;
            }
            chain.push(next);
        }
        Ok(SturmChain { chain })
    }

    pub fn chain(&self) -> &[IntPolynomial] {
        &self.chain
    }

    /// The square-free part the chain starts from.
    pub fn square_free(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, num: &BigInt, den: &BigInt) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(num, den)))
    }

    pub fn variations_at_dyadic(&self, x: &Dyadic) -> usize {
        self.variations_at(x.mantissa(), &x.denominator())
    }

    pub fn variations_at_rational(&self, x: &BigRational) -> usize {
        self.variations_at(x.numer(), x.denom())
    }

    /// Variations at ±∞ from leading coefficients and degree parity.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let lc = p.leading().expect("chain members are nonzero");
            let odd = p.degree().unwrap() % 2 == 1;
            let neg = lc.is_negative() ^ (!positive && odd);
            if neg {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }))
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_dyadic(&self, a: &Dyadic, b: &Dyadic) -> usize {
        self.variations_at_dyadic(a)
            .saturating_sub(self.variations_at_dyadic(b))
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_rational(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at_rational(a)
            .saturating_sub(self.variations_at_rational(b))
    }

    /// Total number of distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

impl IntPolynomial {
    /// `1 + ⌈max|c_i| / |c_lead|⌉`; every complex root has modulus below it.
    pub fn cauchy_bound(&self) -> BigInt {
        let lead = self.leading().map(|c| c.abs()).unwrap_or_else(BigInt::one);
        let max = self
            .coeffs()
            .iter()
            .take(self.coeffs().len().saturating_sub(1))
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        let (q, r) = num_integer::Integer::div_rem(&max, &lead);
        let ceil = if r.is_zero() { q } else { q + 1 };
        ceil + 1
    }
}
