//! The five clique-polynomial families `2A₁ … 5A₁` and `A*₂`, their
//! characteristic polynomials, the admissibility filters, exhaustive
//! enumeration at a fixed degree, and monotonicity scans of the symmetric
//! branches.
//!
//! Forms are parametrized by their clique-polynomial weights: `kA₁` with
//! weights `w_1..w_k` has `Q = 1 - Σ t^{w_i}`, and `A*₂(a, b, c)` has
//! `Q = 1 - t^a - t^b - t^c + t^{a+b}`. The characteristic polynomial is
//! `P(t) = tⁿ·Q(1/t)` with `n = deg Q`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{is_skew_reciprocal_up_to_cyclotomic, parity_condition};
use crate::constants::{compare_normalized_to_silver_squared, golden};
use crate::error::{Error, Result};
use crate::poly::{
    compare_roots, largest_real_root, EnclosureJson, IntPolynomial, RootEnclosure, SturmChain,
    Tolerance, ValueEnclosure,
};

pub const DEFAULT_MAX_DEGREE: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FormTag {
    #[serde(rename = "2A1")]
    TwoA1,
    #[serde(rename = "3A1")]
    ThreeA1,
    #[serde(rename = "4A1")]
    FourA1,
    #[serde(rename = "5A1")]
    FiveA1,
    #[serde(rename = "AStar2")]
    AStar2,
}

impl FormTag {
    pub const ALL: [FormTag; 5] = [
        FormTag::TwoA1,
        FormTag::ThreeA1,
        FormTag::FourA1,
        FormTag::FiveA1,
        FormTag::AStar2,
    ];

    /// Number of weights; `A*₂` carries `(a, b, c)`.
    pub fn arity(self) -> usize {
        match self {
            FormTag::TwoA1 => 2,
            FormTag::ThreeA1 | FormTag::AStar2 => 3,
            FormTag::FourA1 => 4,
            FormTag::FiveA1 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FormTag::TwoA1 => "2A1",
            FormTag::ThreeA1 => "3A1",
            FormTag::FourA1 => "4A1",
            FormTag::FiveA1 => "5A1",
            FormTag::AStar2 => "AStar2",
        }
    }

    /// Comma-separated tags, or `all`.
    pub fn parse_list(s: &str) -> Result<Vec<FormTag>> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(Self::ALL.to_vec());
        }
        let mut out: Vec<FormTag> = s.split(',').map(|t| t.trim().parse()).collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for FormTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "2a1" => Ok(FormTag::TwoA1),
            "3a1" => Ok(FormTag::ThreeA1),
            "4a1" => Ok(FormTag::FourA1),
            "5a1" => Ok(FormTag::FiveA1),
            "astar2" | "a*2" => Ok(FormTag::AStar2),
            _ => Err(Error::parse("forms", format!("unknown form `{s}`"))),
        }
    }
}

impl fmt::Display for FormTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A form with its clique-polynomial weights. For `kA₁` the weights are
/// kept sorted; for `A*₂` they are `(a, b, c)` with `a ≤ b`, `a` and `b`
/// the weights of the adjacent pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyForm {
    pub tag: FormTag,
    pub weights: Vec<usize>,
}

impl FamilyForm {
    pub fn new(tag: FormTag, mut weights: Vec<usize>) -> Result<Self> {
        if weights.len() != tag.arity() {
            return Err(Error::InvalidArgument(format!(
                "{tag} takes {} weights, got {}",
                tag.arity(),
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidArgument("weights must be positive".into()));
        }
        match tag {
            FormTag::AStar2 => {
                if weights[0] > weights[1] {
                    weights.swap(0, 1);
                }
            }
            _ => weights.sort_unstable(),
        }
        Ok(FamilyForm { tag, weights })
    }

    /// `kA₁` with `k - 1` free weights and the top weight `n`.
    pub fn with_top(tag: FormTag, free: &[usize], n: usize) -> Result<Self> {
        let mut w = free.to_vec();
        w.push(n);
        Self::new(tag, w)
    }

    /// `(exponent, sign)` terms of `Q` other than the constant 1.
    fn q_terms(&self) -> Vec<(usize, i64)> {
        let mut terms: Vec<(usize, i64)> = self.weights.iter().map(|&w| (w, -1)).collect();
        if self.tag == FormTag::AStar2 {
            terms.push((self.weights[0] + self.weights[1], 1));
        }
        terms
    }

    /// Degree of `Q`, i.e. the matrix dimension.
    pub fn degree(&self) -> usize {
        self.q_terms().iter().map(|t| t.0).max().unwrap_or(0)
    }

    pub fn clique_polynomial(&self) -> IntPolynomial {
        let mut terms: Vec<(i64, usize)> = vec![(1, 0)];
        terms.extend(self.q_terms().into_iter().map(|(e, s)| (s, e)));
        IntPolynomial::from_terms(&terms)
    }

    /// `P(t) = tⁿ·Q(1/t)`; the top weight must equal `n`.
    pub fn instantiate(&self, n: usize) -> Result<IntPolynomial> {
        let d = self.degree();
        if d != n {
            return Err(Error::InvalidArgument(format!(
                "{self} has top exponent {d}, expected {n}"
            )));
        }
        let mut terms: Vec<(i64, usize)> = vec![(1, n)];
        terms.extend(self.q_terms().into_iter().map(|(e, s)| (s, n - e)));
        Ok(IntPolynomial::from_terms(&terms))
    }
}

impl fmt::Display for FamilyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(|x| x.to_string()).collect();
        write!(f, "{}({})", self.tag, w.join(","))
    }
}

/// Not a polynomial in `t^d` for any `d > 1`: necessary for the
/// characteristic polynomial of a primitive matrix.
pub fn primitivity_compatible(p: &IntPolynomial) -> bool {
    p.exponent_gcd() == 1
}

/// `p / divisor`, failing with the remainder when the division is not exact.
pub fn quotient_exact(p: &IntPolynomial, divisor: &IntPolynomial) -> Result<IntPolynomial> {
    p.div_exact(divisor)
}

fn has_root_above_one(p: &IntPolynomial) -> Result<bool> {
    if p.is_constant() {
        return Ok(false);
    }
    let bound = BigRational::from_integer(p.cauchy_bound());
    if bound <= BigRational::one() {
        return Ok(false);
    }
    Ok(SturmChain::new(p)?.count_rational(&BigRational::one(), &bound) > 0)
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmissibilityReport {
    pub polynomial: IntPolynomial,
    /// Every form instance producing this polynomial.
    pub forms: Vec<FamilyForm>,
    pub parity_ok: bool,
    pub primitivity_compatible: bool,
    pub skew_up_to_cyclotomic: bool,
    pub admissible: bool,
    pub normalized_largest_root: Option<EnclosureJson>,
    /// `λⁿ ≥ 3 + 2√2`, decided exactly.
    pub at_least_silver_squared: Option<bool>,
    #[serde(skip)]
    pub root: Option<RootEnclosure>,
    #[serde(skip)]
    pub normalized: Option<ValueEnclosure>,
}

impl AdmissibilityReport {
    /// Runs every filter; the root is only computed for candidates passing
    /// the three algebraic ones.
    pub fn assess(p: &IntPolynomial, forms: Vec<FamilyForm>, tol: Tolerance) -> Result<Self> {
        let n = p.checked_degree()?;
        let parity_ok = parity_condition(p);
        let primitivity_compatible = primitivity_compatible(p);
        let skew_up_to_cyclotomic = is_skew_reciprocal_up_to_cyclotomic(p);
        let mut report = AdmissibilityReport {
            polynomial: p.clone(),
            forms,
            parity_ok,
            primitivity_compatible,
            skew_up_to_cyclotomic,
            admissible: false,
            normalized_largest_root: None,
            at_least_silver_squared: None,
            root: None,
            normalized: None,
        };
        if parity_ok && primitivity_compatible && skew_up_to_cyclotomic && has_root_above_one(p)? {
            let root = largest_real_root(p, tol)?;
            let value = root.pow(n as u32);
            report.admissible = true;
            report.normalized_largest_root = Some(value.to_json());
            report.at_least_silver_squared =
                Some(compare_normalized_to_silver_squared(&root, n)? != Ordering::Less);
            report.root = Some(root);
            report.normalized = Some(value);
        }
        Ok(report)
    }
}

/// Every weight multiset of `tag` with top exponent `n`, one per multiset.
pub fn forms_of_degree(tag: FormTag, n: usize) -> Vec<FamilyForm> {
    let mut out = Vec::new();
    match tag {
        FormTag::AStar2 => {
            for a in 1..n {
                for b in a..n {
                    if a + b > n {
                        break;
                    }
                    for c in 1..=n {
                        if c.max(a + b) == n {
                            out.push(FamilyForm {
                                tag,
                                weights: vec![a, b, c],
                            });
                        }
                    }
                }
            }
        }
        _ => {
            // nondecreasing sequences of k - 1 weights in 1..=n, then n
            let k = tag.arity() - 1;
            let mut w = vec![1usize; k];
            loop {
                let mut weights = w.clone();
                weights.push(n);
                out.push(FamilyForm { tag, weights });
                let Some(i) = (0..k).rev().find(|&i| w[i] < n) else {
                    break;
                };
                let v = w[i] + 1;
                for x in w.iter_mut().skip(i) {
                    *x = v;
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Enumeration {
    pub n: usize,
    pub forms: Vec<FormTag>,
    pub candidates: usize,
    pub distinct_polynomials: usize,
    /// Admissible reports, ascending in normalized largest root.
    pub admissible: Vec<AdmissibilityReport>,
    #[serde(skip)]
    pub all: Vec<AdmissibilityReport>,
}

impl Enumeration {
    pub fn minimum(&self) -> Option<&AdmissibilityReport> {
        self.admissible.first()
    }

    /// Smallest normalized value is at least `3 + 2√2` (vacuous when
    /// nothing is admissible).
    pub fn bound_holds(&self) -> bool {
        self.admissible
            .iter()
            .all(|r| r.at_least_silver_squared == Some(true))
    }
}

pub fn enumerate_admissible(n: usize, forms: &[FormTag], tol: Tolerance) -> Result<Vec<AdmissibilityReport>> {
    Ok(enumerate(n, forms, tol, DEFAULT_MAX_DEGREE)?.admissible)
}

/// Exhaustive enumeration at degree `n`, deduplicated by polynomial.
pub fn enumerate(n: usize, forms: &[FormTag], tol: Tolerance, max_degree: usize) -> Result<Enumeration> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("degree must be at least 2, got {n}")));
    }
    if n > max_degree {
        return Err(Error::CapExceeded {
            what: "family degree",
            cap: max_degree as u64,
        });
    }
    let mut by_poly: BTreeMap<IntPolynomial, Vec<FamilyForm>> = BTreeMap::new();
    let mut candidates = 0;
    for &tag in forms {
        for form in forms_of_degree(tag, n) {
            candidates += 1;
            let p = form.instantiate(n)?;
            by_poly.entry(p).or_default().push(form);
        }
    }
    let items: Vec<(IntPolynomial, Vec<FamilyForm>)> = by_poly.into_iter().collect();
    let all: Vec<AdmissibilityReport> = items
        .into_par_iter()
        .map(|(p, f)| AdmissibilityReport::assess(&p, f, tol))
        .collect::<Result<_>>()?;
    let mut admissible: Vec<AdmissibilityReport> =
        all.iter().filter(|r| r.admissible).cloned().collect();
    sort_by_root(&mut admissible)?;
    let mut forms = forms.to_vec();
    forms.sort();
    Ok(Enumeration {
        n,
        forms,
        candidates,
        distinct_polynomials: all.len(),
        admissible,
        all,
    })
}

/// Ascending by largest root (all reports share a degree), ties broken by
/// the polynomial order.
fn sort_by_root(reports: &mut [AdmissibilityReport]) -> Result<()> {
    let mut failure = None;
    reports.sort_by(|x, y| {
        let (Some(a), Some(b)) = (&x.root, &y.root) else {
            return x.polynomial.cmp(&y.polynomial);
        };
        match compare_roots(a, b) {
            Ok(Ordering::Equal) => x.polynomial.cmp(&y.polynomial),
            Ok(o) => o,
            Err(e) => {
                failure = Some(e);
                Ordering::Equal
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// The symmetric branches whose largest root is monotone in the offsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ScanBranch {
    /// `t^n - t^{n/2+d} - t^{n/2-d} - 1`
    #[serde(rename = "3A1")]
    ThreeA1,
    /// `t^n - t^{n/2+d} - t^{n/2} - t^{n/2-d} - 1`
    #[serde(rename = "4A1")]
    FourA1,
    /// `t^n - t^{n/2+a} - t^{n/2+b} - t^{n/2-b} - t^{n/2-a} - 1`
    #[serde(rename = "5A1")]
    FiveA1,
}

impl FromStr for ScanBranch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "3a1" => Ok(ScanBranch::ThreeA1),
            "4a1" => Ok(ScanBranch::FourA1),
            "5a1" => Ok(ScanBranch::FiveA1),
            _ => Err(Error::parse("scan", format!("unknown branch `{s}`"))),
        }
    }
}

impl ScanBranch {
    /// Branch polynomial at offsets `(d, e)`; `e` is only used by `5A₁`.
    pub fn polynomial(self, n: usize, d: usize, e: usize) -> Result<IntPolynomial> {
        if !n.is_multiple_of(2) || n < 2 {
            return Err(Error::InvalidArgument(format!("scan degree must be even, got {n}")));
        }
        let g = n / 2;
        if d >= g || e >= g {
            return Err(Error::InvalidArgument(format!(
                "offsets must be below n/2 = {g}"
            )));
        }
        let mut terms: Vec<(i64, usize)> = vec![(1, n), (-1, 0), (-1, g + d), (-1, g - d)];
        match self {
            ScanBranch::ThreeA1 => {}
            ScanBranch::FourA1 => terms.push((-1, g)),
            ScanBranch::FiveA1 => {
                terms.push((-1, g + e));
                terms.push((-1, g - e));
            }
        }
        Ok(IntPolynomial::from_terms(&terms))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanPoint {
    pub offsets: Vec<usize>,
    pub polynomial: IntPolynomial,
    pub normalized: EnclosureJson,
    #[serde(skip)]
    pub root: RootEnclosure,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanResult {
    pub branch: ScanBranch,
    pub n: usize,
    pub strictly_increasing: bool,
    pub values: Vec<ScanPoint>,
}

pub const SEPARATION_ROUNDS: u32 = 10;
pub const SEPARATION_STEP_BITS: u32 = 8;

/// Strict order `a < b` certified by disjoint enclosures, refining by
/// `2^-8` per round. `Ok(false)` when the order is reversed or the roots
/// coincide exactly.
pub fn certify_less(a: &RootEnclosure, b: &RootEnclosure) -> Result<bool> {
    let mut a = a.clone();
    let mut b = b.clone();
    let mut bits = a.width().exp().max(b.width().exp());
    for _ in 0..=SEPARATION_ROUNDS {
        if a.hi <= b.lo {
            return Ok(true);
        }
        if b.hi <= a.lo {
            return Ok(false);
        }
        bits += SEPARATION_STEP_BITS;
        a = a.refine(Tolerance::from_bits(bits))?;
        b = b.refine(Tolerance::from_bits(bits))?;
    }
    if a.same_root(&b)? {
        return Ok(false);
    }
    Err(Error::Unseparated {
        rounds: SEPARATION_ROUNDS,
    })
}

/// Largest roots across `offsets` (pairs over the square grid for `5A₁`),
/// and whether each step up in any single offset strictly increases the
/// root.
pub fn monotonicity_scan(
    branch: ScanBranch,
    n: usize,
    offsets: std::ops::RangeInclusive<usize>,
    tol: Tolerance,
) -> Result<ScanResult> {
    let grid: Vec<Vec<usize>> = match branch {
        ScanBranch::FiveA1 => offsets
            .clone()
            .flat_map(|a| offsets.clone().map(move |b| vec![a, b]))
            .collect(),
        _ => offsets.clone().map(|d| vec![d]).collect(),
    };
    let values: Vec<ScanPoint> = grid
        .into_par_iter()
        .map(|o| {
            let p = branch.polynomial(n, o[0], o.get(1).copied().unwrap_or(0))?;
            let root = largest_real_root(&p, tol)?;
            Ok(ScanPoint {
                normalized: root.pow(n as u32).to_json(),
                offsets: o,
                polynomial: p,
                root,
            })
        })
        .collect::<Result<_>>()?;
    let index: BTreeMap<Vec<usize>, usize> = values
        .iter()
        .enumerate()
        .map(|(i, v)| (v.offsets.clone(), i))
        .collect();
    let mut strictly_increasing = true;
    for v in &values {
        for axis in 0..v.offsets.len() {
            let mut next = v.offsets.clone();
            next[axis] += 1;
            if let Some(&j) = index.get(&next) {
                if !certify_less(&v.root, &values[j].root)? {
                    strictly_increasing = false;
                }
            }
        }
    }
    Ok(ScanResult {
        branch,
        n,
        strictly_increasing,
        values,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LowDegreeReport {
    pub mu_squared: EnclosureJson,
    pub mu_squared_below_bound: bool,
    pub mu_squared_skew_reciprocal: bool,
    pub mu_cubed: EnclosureJson,
    pub mu_cubed_below_bound: bool,
    pub mu_cubed_skew_up_to_cyclotomic: bool,
    /// `t⁴ - t³ - 1` and `t⁴ - 2t - 1` are absent from the degree-4 list.
    pub degree_four_excludes_analogues: bool,
    pub all_ok: bool,
}

/// The degree-2 and degree-3 exceptions below `3 + 2√2`, and the
/// exclusion of their degree-4 analogues.
pub fn verify_low_degree_exceptions(tol: Tolerance) -> Result<LowDegreeReport> {
    let p2 = golden();
    let r2 = largest_real_root(&p2, tol)?;
    let below2 = compare_normalized_to_silver_squared(&r2, 2)? == Ordering::Less;
    let skew2 = crate::classify::is_skew_reciprocal(&p2)?.is_some();
    let p3 = IntPolynomial::from_coeffs(&[-1, -2, 0, 1]);
    let r3 = largest_real_root(&p3, tol)?;
    let below3 = compare_normalized_to_silver_squared(&r3, 3)? == Ordering::Less;
    let skew3 = is_skew_reciprocal_up_to_cyclotomic(&p3);
    let four = enumerate_admissible(4, &FormTag::ALL, tol)?;
    let excluded = [
        IntPolynomial::from_coeffs(&[-1, 0, 0, -1, 1]),
        IntPolynomial::from_coeffs(&[-1, -2, 0, 0, 1]),
    ];
    let excludes = excluded
        .iter()
        .all(|q| four.iter().all(|r| &r.polynomial != q));
    Ok(LowDegreeReport {
        mu_squared: r2.pow(2).to_json(),
        mu_squared_below_bound: below2,
        mu_squared_skew_reciprocal: skew2,
        mu_cubed: r3.pow(3).to_json(),
        mu_cubed_below_bound: below3,
        mu_cubed_skew_up_to_cyclotomic: skew3,
        degree_four_excludes_analogues: excludes,
        all_ok: below2 && skew2 && below3 && skew3 && excludes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c)
    }

    #[test]
    fn instantiation() {
        let f = FamilyForm::with_top(FormTag::ThreeA1, &[1, 3], 4).unwrap();
        assert_eq!(f.instantiate(4).unwrap(), p(&[-1, -1, 0, -1, 1]));
        let f = FamilyForm::with_top(FormTag::ThreeA1, &[2, 2], 4).unwrap();
        assert_eq!(f.instantiate(4).unwrap(), p(&[-1, 0, -2, 0, 1]));
        let f = FamilyForm::new(FormTag::AStar2, vec![1, 1, 4]).unwrap();
        assert_eq!(f.instantiate(4).unwrap(), p(&[-1, 0, 1, -2, 1]));
        assert!(f.instantiate(5).is_err());
        assert!(FamilyForm::new(FormTag::TwoA1, vec![0, 2]).is_err());
        assert!(FamilyForm::new(FormTag::TwoA1, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn reciprocal_convention() {
        for tag in FormTag::ALL {
            for f in forms_of_degree(tag, 6) {
                let q = f.clique_polynomial();
                let mut c = q.coeffs().to_vec();
                c.resize(7, 0.into());
                c.reverse();
                assert_eq!(f.instantiate(6).unwrap(), IntPolynomial::new(c), "{f}");
            }
        }
    }

    #[test]
    fn form_counts() {
        // multisets of 2 from 1..=4
        assert_eq!(forms_of_degree(FormTag::ThreeA1, 4).len(), 10);
        assert_eq!(forms_of_degree(FormTag::TwoA1, 4).len(), 4);
        assert_eq!(forms_of_degree(FormTag::FiveA1, 12).len(), 1365);
    }

    #[test]
    fn primitivity_filter() {
        assert!(!primitivity_compatible(&p(&[-1, 0, -2, 0, 1])));
        assert!(primitivity_compatible(&p(&[-1, -1, 0, -1, 1])));
        assert!(!primitivity_compatible(&p(&[-1, 0, 0, -3, 0, 0, 1])));
    }

    #[test]
    fn quotients() {
        assert_eq!(quotient_exact(&p(&[-1, -2, 0, 1]), &p(&[1, 1])).unwrap(), p(&[-1, -1, 1]));
        assert_eq!(
            quotient_exact(&p(&[-1, -2, -1, 0, 1]), &p(&[1, 1, 1])).unwrap(),
            p(&[-1, -1, 1])
        );
        let err = quotient_exact(&p(&[-1, -1, 0, 0, 0, -1, 1]), &p(&[1, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::InexactDivision { .. }));
    }

    #[test]
    fn degree_four() {
        let tol = Tolerance::default();
        let three = enumerate_admissible(4, &[FormTag::ThreeA1], tol).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].polynomial, p(&[-1, -1, 0, -1, 1]));
        let four = enumerate_admissible(4, &[FormTag::FourA1], tol).unwrap();
        assert_eq!(four.len(), 1);
        assert_eq!(four[0].polynomial, p(&[-1, -2, -1, 0, 1]));
        let all = enumerate(4, &FormTag::ALL, tol, DEFAULT_MAX_DEGREE).unwrap();
        assert!(all.bound_holds());
        let min = all.minimum().unwrap().normalized.as_ref().unwrap().midpoint_f64();
        assert!((min - 6.854_101_966_249_685).abs() < 1e-9);
        let polys: Vec<_> = all.admissible.iter().map(|r| r.polynomial.clone()).collect();
        assert!(polys.contains(&p(&[-1, -2, 0, -2, 1])));
        assert!(polys.contains(&p(&[-1, 0, 1, -2, 1])));
    }

    #[test]
    fn scan_endpoints() {
        let tol = Tolerance::default();
        let s = monotonicity_scan(ScanBranch::ThreeA1, 12, 0..=5, tol).unwrap();
        assert!(s.strictly_increasing);
        let v0 = s.values[0].root.pow(12).midpoint_f64();
        assert!((v0 - 5.828_427_124_746_19).abs() < 1e-9);
        let s = monotonicity_scan(ScanBranch::FourA1, 12, 0..=5, tol).unwrap();
        assert!(s.strictly_increasing);
        assert!((s.values[0].root.pow(12).midpoint_f64() - 10.908_326_913_195_984).abs() < 1e-7);
    }

    #[test]
    fn certify_detects_equality_and_order() {
        let tol = Tolerance::default();
        let a = largest_real_root(&p(&[-1, -1, 1]), tol).unwrap();
        let b = largest_real_root(&p(&[-1, -1, 0, -1, 1]), tol).unwrap();
        let c = largest_real_root(&p(&[-1, -2, 1]), tol).unwrap();
        assert!(!certify_less(&a, &b).unwrap());
        assert!(certify_less(&a, &c).unwrap());
        assert!(!certify_less(&c, &a).unwrap());
    }

    #[test]
    fn low_degree() {
        let r = verify_low_degree_exceptions(Tolerance::default()).unwrap();
        assert!(r.all_ok);
    }
}
