//! Simple closed curves of the digraph of a nonnegative matrix, the weighted
//! curve graph on them, its clique polynomial and growth rate, and detection
//! of the small shapes `nA₁` and `A*₂`.
//!
//! For a nonnegative `n×n` matrix `A` the clique polynomial of the curve
//! graph equals `tⁿ·χ_A(1/t)`; parallel edges must be treated as distinct
//! curves for that to hold when entries exceed 1.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poly::{largest_real_root, EnclosureJson, IntPolynomial, RootEnclosure, SturmChain, Tolerance};

pub const DEFAULT_CYCLE_CAP: u64 = 100_000;
pub const DEFAULT_CLIQUE_CAP: u64 = 1_000_000;
/// Vertex sets are stored as bitmasks.
pub const MAX_VERTICES: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub cycles: u64,
    pub cliques: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            cycles: DEFAULT_CYCLE_CAP,
            cliques: DEFAULT_CLIQUE_CAP,
        }
    }
}

/// Edge multiplicities `a_ij` of a nonnegative matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiDigraph {
    n: usize,
    mult: Vec<Vec<u64>>,
}

impl MultiDigraph {
    pub fn from_matrix(a: &IntMatrix) -> Result<Self> {
        if let Some((row, col)) = a.first_negative() {
            return Err(Error::NegativeEntry { row, col });
        }
        let n = a.n();
        if n > MAX_VERTICES {
            return Err(Error::InvalidArgument(format!(
                "curve graphs support at most {MAX_VERTICES} vertices"
            )));
        }
        let mut mult = vec![vec![0u64; n]; n];
        for (i, row) in mult.iter_mut().enumerate() {
            for (j, m) in row.iter_mut().enumerate() {
                *m = a.get(i, j).to_u64().ok_or_else(|| {
                    Error::InvalidArgument(format!("entry ({i}, {j}) too large"))
                })?;
            }
        }
        Ok(MultiDigraph { n, mult })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u64 {
        self.mult[i][j]
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let entries = self.mult.iter().flatten().map(|&m| BigInt::from(m)).collect();
        IntMatrix::from_flat(self.n, entries).expect("square")
    }
}

/// A vertex-simple directed cycle, stored from its smallest vertex.
/// `edge_choices[k]` picks one of the parallel edges from `vertices[k]` to
/// the next vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimpleCycle {
    pub vertices: Vec<usize>,
    pub edge_choices: Vec<u64>,
}

impl SimpleCycle {
    pub fn weight(&self) -> usize {
        self.vertices.len()
    }

    pub fn mask(&self) -> u128 {
        self.vertices.iter().fold(0u128, |m, &v| m | (1u128 << v))
    }
}

/// All simple cycles, parallel edges counted as distinct curves. Ordered by
/// smallest vertex, then depth-first over ascending successors, then by the
/// parallel-edge choices.
pub fn simple_cycles(a: &IntMatrix, cap: u64) -> Result<Vec<SimpleCycle>> {
    let g = MultiDigraph::from_matrix(a)?;
    simple_cycles_of(&g, cap)
}

pub fn simple_cycles_of(g: &MultiDigraph, cap: u64) -> Result<Vec<SimpleCycle>> {
    let n = g.n;
    let mut out = Vec::new();
    let mut total: u64 = 0;
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        path.clear();
        path.push(s);
        let mut on_path = 1u128 << s;
        extend(g, s, &mut path, &mut on_path, &mut out, &mut total, cap)?;
    }
    Ok(out)
}

fn extend(
    g: &MultiDigraph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut u128,
    out: &mut Vec<SimpleCycle>,
    total: &mut u64,
    cap: u64,
) -> Result<()> {
    let u = *path.last().unwrap();
    for v in s..g.n {
        if g.mult[u][v] == 0 {
            continue;
        }
        if v == s {
            emit(g, path, out, total, cap)?;
        } else if *on_path & (1u128 << v) == 0 {
            path.push(v);
            *on_path |= 1u128 << v;
            extend(g, s, path, on_path, out, total, cap)?;
            *on_path &= !(1u128 << v);
            path.pop();
        }
    }
    Ok(())
}

fn emit(
    g: &MultiDigraph,
    path: &[usize],
    out: &mut Vec<SimpleCycle>,
    total: &mut u64,
    cap: u64,
) -> Result<()> {
    let k = path.len();
    let mults: Vec<u64> = (0..k).map(|i| g.mult[path[i]][path[(i + 1) % k]]).collect();
    let count = mults
        .iter()
        .try_fold(1u64, |acc, &m| acc.checked_mul(m))
        .unwrap_or(u64::MAX);
    *total = total.saturating_add(count);
    if *total > cap {
        return Err(Error::CapExceeded {
            what: "simple cycle count",
            cap,
        });
    }
    let mut choice = vec![0u64; k];
    loop {
        out.push(SimpleCycle {
            vertices: path.to_vec(),
            edge_choices: choice.clone(),
        });
        // odometer over the parallel-edge choices, last position fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < mults[i] {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Vertices are simple cycles weighted by length; two are adjacent iff
/// their vertex sets are disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveGraph {
    pub cycles: Vec<SimpleCycle>,
    pub edges: Vec<(usize, usize)>,
}

impl CurveGraph {
    pub fn from_matrix(a: &IntMatrix, caps: Caps) -> Result<Self> {
        Ok(Self::from_cycles(simple_cycles(a, caps.cycles)?))
    }

    pub fn from_cycles(cycles: Vec<SimpleCycle>) -> Self {
        let masks: Vec<u128> = cycles.iter().map(SimpleCycle::mask).collect();
        let mut edges = Vec::new();
        for i in 0..cycles.len() {
            for j in i + 1..cycles.len() {
                if masks[i] & masks[j] == 0 {
                    edges.push((i, j));
                }
            }
        }
        CurveGraph { cycles, edges }
    }

    pub fn weights(&self) -> Vec<usize> {
        self.cycles.iter().map(SimpleCycle::weight).collect()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cycles[i].mask() & self.cycles[j].mask() == 0
    }

    /// `Q(t) = 1 + Σ_K (-1)^|K| t^{w(K)}` over nonempty cliques `K`.
    ///
    /// Cycles sharing a vertex set are never adjacent, so a clique picks at
    /// most one cycle per vertex set. Cliques are enumerated over distinct
    /// vertex sets, each contributing the product of the cycle counts; the
    /// cap applies to these set-level cliques.
    pub fn clique_polynomial(&self, cap: u64) -> Result<IntPolynomial> {
        let mut supports: BTreeMap<u128, u64> = BTreeMap::new();
        for c in &self.cycles {
            *supports.entry(c.mask()).or_default() += 1;
        }
        let supports: Vec<(u128, usize, BigInt)> = supports
            .into_iter()
            .map(|(m, count)| (m, m.count_ones() as usize, BigInt::from(count)))
            .collect();
        // a clique uses pairwise disjoint vertex sets
        let max_weight = supports.iter().fold(0u128, |m, s| m | s.0).count_ones() as usize;
        let mut coeffs = vec![BigInt::zero(); max_weight + 1];
        coeffs[0] = BigInt::from(1);
        let mut visited = 0u64;
        let mut state = CliqueWalk {
            supports: &supports,
            coeffs: &mut coeffs,
            visited: &mut visited,
            cap,
        };
        state.walk(0, 0, 0, &BigInt::from(1), false)?;
        Ok(IntPolynomial::new(coeffs))
    }

    pub fn shape(&self) -> CurveGraphShape {
        let w = self.weights();
        match (w.len(), self.edges.len()) {
            (n, 0) if n > 0 => {
                let mut weights = w;
                weights.sort_unstable();
                CurveGraphShape::NA1 { n, weights }
            }
            (3, 1) => {
                let (i, j) = self.edges[0];
                let k = 3 - i - j;
                let (a, b) = (w[i].min(w[j]), w[i].max(w[j]));
                CurveGraphShape::AStar2 { a, b, c: w[k] }
            }
            _ => CurveGraphShape::Other,
        }
    }
}

struct CliqueWalk<'a> {
    supports: &'a [(u128, usize, BigInt)],
    coeffs: &'a mut Vec<BigInt>,
    visited: &'a mut u64,
    cap: u64,
}

impl CliqueWalk<'_> {
    fn walk(&mut self, start: usize, used: u128, weight: usize, mult: &BigInt, odd: bool) -> Result<()> {
        for idx in start..self.supports.len() {
            let (mask, w, count) = &self.supports[idx];
            if used & mask != 0 {
                continue;
            }
            *self.visited += 1;
            if *self.visited > self.cap {
                return Err(Error::CapExceeded {
                    what: "clique count",
                    cap: self.cap,
                });
            }
            let m = mult * count;
            let now_odd = !odd;
            if now_odd {
                self.coeffs[weight + w] -= &m;
            } else {
                self.coeffs[weight + w] += &m;
            }
            self.walk(idx + 1, used | mask, weight + w, &m, now_odd)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum CurveGraphShape {
    /// `n` pairwise-intersecting curves; weights ascending.
    #[serde(rename = "nA1")]
    NA1 { n: usize, weights: Vec<usize> },
    /// Three curves with exactly one disjoint pair `{a, b}` (`a ≤ b`); `c`
    /// is the weight of the remaining curve.
    #[serde(rename = "AStar2")]
    AStar2 { a: usize, b: usize, c: usize },
    #[serde(rename = "other")]
    Other,
}

/// `tⁿ·χ_A(1/t)`.
pub fn reversed_char_poly(a: &IntMatrix) -> IntPolynomial {
    a.char_poly().reversal()
}

pub fn verify_clique_identity(a: &IntMatrix, caps: Caps) -> Result<bool> {
    let g = CurveGraph::from_matrix(a, caps)?;
    Ok(g.clique_polynomial(caps.cliques)? == reversed_char_poly(a))
}

/// Reciprocal of the smallest positive root of `Q`, computed as the
/// largest real root of the reversal of `Q`.
pub fn growth_rate(q: &IntPolynomial, tol: Tolerance) -> Result<RootEnclosure> {
    let rev = q.reversal();
    if rev.is_constant() || rev.is_zero() {
        return Err(Error::NoGrowth);
    }
    let above_one = SturmChain::new(&rev)?.count_rational(
        &num_rational::BigRational::from_integer(1.into()),
        &num_rational::BigRational::from_integer(rev.cauchy_bound()),
    );
    if above_one == 0 {
        return Err(Error::NoGrowth);
    }
    largest_real_root(&rev, tol)
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveGraphReport {
    pub cycles: Vec<Vec<usize>>,
    pub weights: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub clique_poly: IntPolynomial,
    pub growth_rate: Option<EnclosureJson>,
    pub shape: CurveGraphShape,
    pub identity_ok: bool,
}

pub fn analyze(a: &IntMatrix, caps: Caps, tol: Tolerance) -> Result<CurveGraphReport> {
    let g = CurveGraph::from_matrix(a, caps)?;
    let q = g.clique_polynomial(caps.cliques)?;
    let growth = match growth_rate(&q, tol) {
        Ok(e) => Some(e.to_json()),
        Err(Error::NoGrowth) => None,
        Err(e) => return Err(e),
    };
    Ok(CurveGraphReport {
        cycles: g.cycles.iter().map(|c| c.vertices.clone()).collect(),
        weights: g.weights(),
        edges: g.edges.clone(),
        identity_ok: q == reversed_char_poly(a),
        clique_poly: q,
        growth_rate: growth,
        shape: g.shape(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{fibonacci_matrix, punctured_torus_matrix};

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c)
    }

    #[test]
    fn cycles_of_small_matrices() {
        let c = simple_cycles(&fibonacci_matrix(), DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].vertices, vec![0]);
        assert_eq!(c[1].vertices, vec![0, 1]);
        let c = simple_cycles(&m(&[&[2]]), DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|x| x.weight() == 1));
        assert_ne!(c[0], c[1]);
        assert!(simple_cycles(&IntMatrix::zero(3), 10).unwrap().is_empty());
        assert!(matches!(
            simple_cycles(&m(&[&[1, -1], &[0, 1]]), 10),
            Err(Error::NegativeEntry { row: 0, col: 1 })
        ));
    }

    #[test]
    fn cycle_cap() {
        let full = IntMatrix::from_flat_i64(5, &[1; 25]).unwrap();
        assert!(matches!(
            simple_cycles(&full, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn clique_polynomials() {
        let q = |a: &IntMatrix| {
            CurveGraph::from_matrix(a, Caps::default())
                .unwrap()
                .clique_polynomial(DEFAULT_CLIQUE_CAP)
                .unwrap()
        };
        assert_eq!(q(&fibonacci_matrix()), p(&[1, -1, -1]));
        assert_eq!(q(&IntMatrix::identity(2)), p(&[1, -2, 1]));
        assert_eq!(q(&punctured_torus_matrix()), p(&[1, 0, -1, -2, -1]));
        assert_eq!(q(&m(&[&[2, 1], &[3, 0]])), reversed_char_poly(&m(&[&[2, 1], &[3, 0]])));
    }

    #[test]
    fn identity_on_all_binary_2x2() {
        for bits in 0..16u32 {
            let e: Vec<i64> = (0..4).map(|k| ((bits >> k) & 1) as i64).collect();
            let a = IntMatrix::from_flat_i64(2, &e).unwrap();
            assert!(verify_clique_identity(&a, Caps::default()).unwrap(), "{a}");
        }
    }

    #[test]
    fn growth_rates() {
        let tol = Tolerance::default();
        let g = growth_rate(&p(&[1, -1, -1]), tol).unwrap();
        assert!((g.midpoint_f64() - 1.618_033_988_749_895).abs() < 1e-10);
        let g = growth_rate(&p(&[1, -2]), tol).unwrap();
        assert!((g.midpoint_f64() - 2.0).abs() < 1e-10);
        let g = growth_rate(&p(&[1, 0, -1, -2, -1]), tol).unwrap();
        assert!((g.midpoint_f64() - 1.618_033_988_749_895).abs() < 1e-10);
        assert_eq!(growth_rate(&p(&[1, -1]), tol), Err(Error::NoGrowth));
        assert_eq!(growth_rate(&IntPolynomial::one(), tol), Err(Error::NoGrowth));
    }

    #[test]
    fn shapes() {
        let g = CurveGraph::from_matrix(&fibonacci_matrix(), Caps::default()).unwrap();
        assert_eq!(g.shape(), CurveGraphShape::NA1 { n: 2, weights: vec![1, 2] });
        let g = CurveGraph::from_matrix(&punctured_torus_matrix(), Caps::default()).unwrap();
        assert_eq!(
            g.shape(),
            CurveGraphShape::NA1 { n: 4, weights: vec![2, 3, 3, 4] }
        );
        let g = CurveGraph::from_matrix(&IntMatrix::identity(3), Caps::default()).unwrap();
        assert_eq!(g.shape(), CurveGraphShape::Other);
        // loop at 0, loop at 1, and the 2-cycle through both
        let g = CurveGraph::from_matrix(&m(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 0]]), Caps::default()).unwrap();
        assert_eq!(g.shape(), CurveGraphShape::AStar2 { a: 1, b: 1, c: 2 });
    }
}
