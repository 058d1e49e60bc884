//! Exhaustive scans over small nonnegative integer matrices: every `n×n`
//! matrix with entries in `0..=max_entry` is checked for primitivity,
//! `det = ±1`, skew-reciprocity up to cyclotomic factors and growth, and
//! the qualifying ones are compared with `3 + 2√2`.
//!
//! Only a finite slice of the matrices covered by the lower bound is ever
//! visited; reports say so.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, SpectralClass};
use crate::constants::compare_normalized_to_silver_squared;
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, PrimitivityReport};
use crate::poly::{
    compare_roots, largest_real_root, real_roots_in_interval, EnclosureJson, IntPolynomial,
    RootEnclosure, Tolerance,
};

/// Largest search space scanned unless overridden.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

pub const SCOPE_NOTE: &str =
    "finite slice: only the matrices of this dimension and entry bound were scanned";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchFilters {
    pub require_glnz: bool,
    pub require_primitive: bool,
    pub require_skew_up_to_cyclotomic: bool,
}

impl Default for SearchFilters {
    fn default() -> Self {
        SearchFilters {
            require_glnz: true,
            require_primitive: true,
            require_skew_up_to_cyclotomic: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub max_entry: u32,
    pub filters: SearchFilters,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub budget: u64,
    pub tol: Tolerance,
}

impl SearchConfig {
    pub fn new(n: usize, max_entry: u32) -> Self {
        SearchConfig {
            n,
            max_entry,
            filters: SearchFilters::default(),
            threads: None,
            budget: DEFAULT_BUDGET,
            tol: Tolerance::default(),
        }
    }

    /// `(max_entry + 1)^(n²)`, or `None` past `u64`.
    pub fn space_size(&self) -> Option<u64> {
        (self.max_entry as u64 + 1).checked_pow(u32::try_from(self.n * self.n).ok()?)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    pub matrix: IntMatrix,
    pub char_poly: IntPolynomial,
    pub normalized: EnclosureJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub max_entry: u32,
    pub filters: SearchFilters,
    pub scanned: u64,
    pub qualifying: u64,
    pub distinct_char_polys: usize,
    /// Least normalized spectral radius among qualifying matrices; ties go
    /// to the lexicographically least entry sequence.
    pub minimum: Option<SearchHit>,
    /// Qualifying matrices with `ρ(A)^n` certified below `3 + 2√2`, in
    /// lexicographic order.
    pub violations: Vec<SearchHit>,
    pub scope: &'static str,
}

/// Entry sequence number `index` in lexicographic order, most significant
/// entry first.
fn decode(mut index: u64, len: usize, base: u64) -> Vec<i64> {
    let mut out = vec![0i64; len];
    for slot in out.iter_mut().rev() {
        *slot = (index % base) as i64;
        index /= base;
    }
    out
}

/// Per characteristic polynomial: every matrix passing the structural
/// filters, in scan order.
type Buckets = HashMap<IntPolynomial, Vec<u64>>;

fn structural_pass(m: &IntMatrix, filters: SearchFilters) -> bool {
    (!filters.require_primitive || m.is_primitive()) && (!filters.require_glnz || m.in_glnz())
}

/// Whether `p` has a real root above 1.
fn grows(p: &IntPolynomial, root: &RootEnclosure) -> Result<bool> {
    let one = BigRational::one();
    let top = root.hi.to_rational() + &one;
    Ok(real_roots_in_interval(p, &one, &top)? > 0)
}

struct PolyVerdict {
    qualifies: bool,
    root: Option<RootEnclosure>,
    below: bool,
}

fn judge(p: &IntPolynomial, n: usize, cfg: &SearchConfig) -> Result<PolyVerdict> {
    let skew_ok = !cfg.filters.require_skew_up_to_cyclotomic || classify(p)?.skew_up_to_cyclotomic;
    if !skew_ok {
        return Ok(PolyVerdict { qualifies: false, root: None, below: false });
    }
    let root = match largest_real_root(p, cfg.tol) {
        Ok(r) => r,
        Err(Error::NoRealRoot) => return Ok(PolyVerdict { qualifies: false, root: None, below: false }),
        Err(e) => return Err(e),
    };
    if !grows(p, &root)? {
        return Ok(PolyVerdict { qualifies: false, root: None, below: false });
    }
    let below = compare_normalized_to_silver_squared(&root, n)? == Ordering::Less;
    Ok(PolyVerdict { qualifies: true, root: Some(root), below })
}

pub fn run_search(cfg: &SearchConfig) -> Result<SearchResult> {
    if cfg.n == 0 || cfg.max_entry == 0 {
        return Err(Error::InvalidArgument("n and max_entry must be at least 1".into()));
    }
    let size = cfg.space_size().filter(|&s| s <= cfg.budget).ok_or(Error::CapExceeded {
        what: "search space",
        cap: cfg.budget,
    })?;
    match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(|| scan(cfg, size)),
        None => scan(cfg, size),
    }
}

fn scan(cfg: &SearchConfig, size: u64) -> Result<SearchResult> {
    let n = cfg.n;
    let base = cfg.max_entry as u64 + 1;
    let to_matrix = |i: u64| IntMatrix::from_flat_i64(n, &decode(i, n * n, base)).expect("square");

    let buckets: Buckets = (0..size)
        .into_par_iter()
        .fold(Buckets::new, |mut acc, i| {
            let m = to_matrix(i);
            if structural_pass(&m, cfg.filters) {
                acc.entry(m.char_poly()).or_default().push(i);
            }
            acc
        })
        .reduce(Buckets::new, |mut a, b| {
            for (p, mut v) in b {
                a.entry(p).or_default().append(&mut v);
            }
            a
        });

    let mut polys: Vec<(IntPolynomial, Vec<u64>)> = buckets.into_iter().collect();
    polys.sort_by(|a, b| a.0.cmp(&b.0));
    let verdicts: Vec<PolyVerdict> = polys
        .par_iter()
        .map(|(p, _)| judge(p, n, cfg))
        .collect::<Result<_>>()?;

    let mut qualifying = 0u64;
    let mut best: Option<(usize, u64)> = None;
    let mut violations = Vec::new();
    for (k, ((p, idx), v)) in polys.iter().zip(&verdicts).enumerate() {
        if !v.qualifies {
            continue;
        }
        qualifying += idx.len() as u64;
        let least = *idx.iter().min().expect("bucket nonempty");
        let root = v.root.as_ref().expect("qualifying has root");
        best = match best {
            None => Some((k, least)),
            Some((bk, bi)) => {
                let broot = verdicts[bk].root.as_ref().expect("qualifying has root");
                match compare_roots(root, broot)? {
                    Ordering::Less => Some((k, least)),
                    Ordering::Equal if least < bi => Some((k, least)),
                    _ => Some((bk, bi)),
                }
            }
        };
        if v.below {
            for &i in idx {
                violations.push((i, hit(to_matrix(i), p, root, n)));
            }
        }
    }
    violations.sort_by_key(|(i, _)| *i);
    let minimum = best.map(|(k, i)| {
        hit(to_matrix(i), &polys[k].0, verdicts[k].root.as_ref().expect("root"), n)
    });
    Ok(SearchResult {
        n,
        max_entry: cfg.max_entry,
        filters: cfg.filters,
        scanned: size,
        qualifying,
        distinct_char_polys: polys.len(),
        minimum,
        violations: violations.into_iter().map(|(_, h)| h).collect(),
        scope: SCOPE_NOTE,
    })
}

fn hit(matrix: IntMatrix, p: &IntPolynomial, root: &RootEnclosure, n: usize) -> SearchHit {
    SearchHit {
        matrix,
        char_poly: p.clone(),
        normalized: root.pow(n as u32).to_json(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub matrix: IntMatrix,
    pub char_poly: IntPolynomial,
    pub det: String,
    pub in_glnz: bool,
    pub primitivity: PrimitivityReport,
    pub class: Option<SpectralClass>,
    pub spectral_radius: Option<EnclosureJson>,
    pub normalized: Option<EnclosureJson>,
    pub has_growth: bool,
    pub qualifies: bool,
    /// `ρ(A)^n < 3 + 2√2`, certified; `None` when there is no growth.
    pub below_silver_squared: Option<bool>,
}

/// The full qualification pipeline on one matrix, keeping every
/// intermediate result.
pub fn witness_check(a: &IntMatrix, tol: Tolerance) -> WitnessReport {
    let n = a.n();
    let char_poly = a.char_poly();
    let class = classify(&char_poly).ok();
    let primitivity = a.primitivity();
    let root = largest_real_root(&char_poly, tol).ok();
    let has_growth = root
        .as_ref()
        .map(|r| grows(&char_poly, r).unwrap_or(false))
        .unwrap_or(false);
    let below = match (&root, has_growth) {
        (Some(r), true) => compare_normalized_to_silver_squared(r, n)
            .ok()
            .map(|o| o == Ordering::Less),
        _ => None,
    };
    let qualifies = primitivity.primitive
        && a.in_glnz()
        && class.as_ref().is_some_and(|c| c.skew_up_to_cyclotomic)
        && has_growth;
    WitnessReport {
        det: a.det().to_string(),
        in_glnz: a.in_glnz(),
        spectral_radius: root.as_ref().map(|r| r.to_json()),
        normalized: root.as_ref().map(|r| r.pow(n as u32).to_json()),
        matrix: a.clone(),
        char_poly,
        primitivity,
        class,
        has_growth,
        qualifies,
        below_silver_squared: below,
    }
}
