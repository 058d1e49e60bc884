//! Combinatorial train tracks stored as fat graphs: each vertex has two
//! sides, each side an ordered list of half-edges, and each edge pairs two
//! half-edges and is either real or infinitesimal.
//!
//! Orientation conventions. Picture a vertex with a horizontal tangent
//! line, side A leaving to the east and side B to the west. Each side is
//! listed left to right as seen by an observer at the vertex looking out
//! along that side. The counterclockwise rotation at the vertex is then
//! `reverse(A) ++ reverse(B)`, and boundary walks follow "arrive at `h`,
//! leave by the counterclockwise successor of `h`". A corner between two
//! half-edges of the same side is a cusp.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    #[serde(rename = "real")]
    Real,
    #[serde(rename = "inf")]
    Infinitesimal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    #[serde(rename = "sideA")]
    pub side_a: Vec<usize>,
    #[serde(rename = "sideB")]
    pub side_b: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub ends: [usize; 2],
    pub kind: EdgeKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrackJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

/// Where a half-edge sits: vertex, side and position within the side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slot {
    pub vertex: usize,
    pub side: Side,
    pub position: usize,
}

/// A validated train track. Half-edges are renumbered `0..2|E|`, with
/// half-edges `2e` and `2e + 1` the two ends of edge `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrainTrack {
    sides: Vec<[Vec<usize>; 2]>,
    kinds: Vec<EdgeKind>,
    slots: Vec<Slot>,
    source: TrackJson,
}

impl TrainTrack {
    pub fn from_json(json: &TrackJson) -> Result<Self> {
        let mut index: HashMap<usize, usize> = HashMap::new();
        for (e, edge) in json.edges.iter().enumerate() {
            for (k, &h) in edge.ends.iter().enumerate() {
                if index.insert(h, 2 * e + k).is_some() {
                    return Err(Error::InvalidTrack(format!(
                        "half-edge {h} is an end of more than one edge"
                    )));
                }
            }
        }
        let mut slots: Vec<Option<Slot>> = vec![None; 2 * json.edges.len()];
        let mut sides = Vec::with_capacity(json.vertices.len());
        for (v, vx) in json.vertices.iter().enumerate() {
            let mut pair: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
            for (s, (side, list)) in [(Side::A, &vx.side_a), (Side::B, &vx.side_b)].into_iter().enumerate() {
                if list.is_empty() {
                    return Err(Error::InvalidTrack(format!("vertex {v} has an empty side")));
                }
                for (position, h) in list.iter().enumerate() {
                    let Some(&id) = index.get(h) else {
                        return Err(Error::InvalidTrack(format!(
                            "half-edge {h} at vertex {v} belongs to no edge"
                        )));
                    };
                    if slots[id].is_some() {
                        return Err(Error::InvalidTrack(format!(
                            "half-edge {h} appears on more than one side"
                        )));
                    }
                    slots[id] = Some(Slot {
                        vertex: v,
                        side,
                        position,
                    });
                    pair[s].push(id);
                }
            }
            sides.push(pair);
        }
        let slots: Vec<Slot> = slots
            .into_iter()
            .enumerate()
            .map(|(id, s)| {
                s.ok_or_else(|| {
                    let h = json.edges[id / 2].ends[id % 2];
                    Error::InvalidTrack(format!("half-edge {h} is not attached to a vertex"))
                })
            })
            .collect::<Result<_>>()?;
        let track = TrainTrack {
            sides,
            kinds: json.edges.iter().map(|e| e.kind).collect(),
            slots,
            source: json.clone(),
        };
        track.check_infinitesimal_cycles()?;
        Ok(track)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let json: TrackJson =
            serde_json::from_str(text).map_err(|e| Error::parse("track", e))?;
        Self::from_json(&json)
    }

    pub fn to_json(&self) -> &TrackJson {
        &self.source
    }

    /// Every vertex meets 0 or 2 infinitesimal half-edges, so the
    /// infinitesimal edges form disjoint cycles.
    fn check_infinitesimal_cycles(&self) -> Result<()> {
        for v in 0..self.vertex_count() {
            let inf = self.half_edges_at(v)
                .filter(|&h| self.kinds[h / 2] == EdgeKind::Infinitesimal)
                .count();
            if inf != 0 && inf != 2 {
                return Err(Error::InvalidTrack(format!(
                    "vertex {v} meets {inf} infinitesimal half-edges; infinitesimal edges must form disjoint cycles"
                )));
            }
        }
        Ok(())
    }

    fn half_edges_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.sides[v][0].iter().chain(&self.sides[v][1]).copied()
    }

    /// Each vertex has one side of infinitesimal half-edges and the other of
    /// real ones, and there is at least one edge of each kind.
    pub fn is_standardly_embedded(&self) -> bool {
        let kinds_of = |list: &[usize]| -> HashSet<EdgeKind> {
            list.iter().map(|&h| self.kinds[h / 2]).collect()
        };
        let has_both = self.kinds.contains(&EdgeKind::Real)
            && self.kinds.contains(&EdgeKind::Infinitesimal);
        has_both
            && self.sides.iter().all(|[a, b]| {
                let (ka, kb) = (kinds_of(a), kinds_of(b));
                ka.len() == 1 && kb.len() == 1 && ka != kb
            })
    }

    pub fn vertex_count(&self) -> usize {
        self.sides.len()
    }

    pub fn edge_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kind(&self, e: usize) -> EdgeKind {
        self.kinds[e]
    }

    pub fn side(&self, v: usize, side: Side) -> &[usize] {
        &self.sides[v][side as usize]
    }

    pub fn slot(&self, h: usize) -> Slot {
        self.slots[h]
    }

    pub fn real_edges(&self) -> Vec<usize> {
        (0..self.edge_count()).filter(|&e| self.kinds[e] == EdgeKind::Real).collect()
    }

    pub fn infinitesimal_edges(&self) -> Vec<usize> {
        (0..self.edge_count())
            .filter(|&e| self.kinds[e] == EdgeKind::Infinitesimal)
            .collect()
    }

    /// The `|V| × |E|` switch matrix: row `v` is `Σ_{A} w_e - Σ_{B} w_e`.
    pub fn switch_matrix(&self) -> Vec<Vector> {
        (0..self.vertex_count())
            .map(|v| {
                let mut row = vec![BigRational::zero(); self.edge_count()];
                for &h in self.side(v, Side::A) {
                    row[h / 2] += BigRational::one();
                }
                for &h in self.side(v, Side::B) {
                    row[h / 2] -= BigRational::one();
                }
                row
            })
            .collect()
    }

    /// First vertex whose switch condition fails, if any.
    pub fn switch_violation(&self, w: &[BigRational]) -> Option<usize> {
        if w.len() != self.edge_count() {
            return Some(0);
        }
        self.switch_matrix()
            .iter()
            .position(|row| !linalg::dot(row, w).is_zero())
    }

    pub fn weight_space(&self) -> WeightSpace {
        let t = self.switch_matrix();
        let basis = linalg::kernel(&t, self.edge_count());
        WeightSpace {
            edge_count: self.edge_count(),
            switch_rank: linalg::rank(&t, self.edge_count()),
            basis,
        }
    }

    /// `ω(w, w')`, summing over ordered pairs on the same side with the
    /// first strictly left of the second.
    pub fn thurston_form(&self, w: &[BigRational], w2: &[BigRational]) -> Result<BigRational> {
        for x in [w, w2] {
            if let Some(vertex) = self.switch_violation(x) {
                return Err(Error::NotInWeightSpace { vertex });
            }
        }
        Ok(self.thurston_form_unchecked(w, w2))
    }

    fn thurston_form_unchecked(&self, w: &[BigRational], w2: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for pair in &self.sides {
            for list in pair {
                for i in 0..list.len() {
                    for j in i + 1..list.len() {
                        let (e1, e2) = (list[i] / 2, list[j] / 2);
                        total += &w[e1] * &w2[e2] - &w[e2] * &w2[e1];
                    }
                }
            }
        }
        total
    }

    /// `Ω_{e1,e2}`: signed count of left-of pairs, so that
    /// `ω(w, w') = wᵀ Ω w'` on all of `ℚ^E`.
    pub fn edge_form_matrix(&self) -> Vec<Vector> {
        let n = self.edge_count();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for pair in &self.sides {
            for list in pair {
                for i in 0..list.len() {
                    for j in i + 1..list.len() {
                        let (e1, e2) = (list[i] / 2, list[j] / 2);
                        m[e1][e2] += BigRational::one();
                        m[e2][e1] -= BigRational::one();
                    }
                }
            }
        }
        m
    }

    /// Counterclockwise rotation at a vertex.
    pub fn rotation(&self, v: usize) -> Vec<usize> {
        let [a, b] = &self.sides[v];
        a.iter().rev().chain(b.iter().rev()).copied().collect()
    }

    fn successor(&self, h: usize) -> usize {
        let rot = self.rotation(self.slots[h].vertex);
        let i = rot.iter().position(|&x| x == h).expect("half-edge in rotation");
        rot[(i + 1) % rot.len()]
    }

    /// Fat-graph face tracing. Each walk is the list of half-edges by which
    /// it leaves successive vertices; walks partition the `2|E|` directed
    /// edge-sides.
    pub fn boundary_components(&self) -> Vec<BoundaryComponent> {
        let total = 2 * self.edge_count();
        let mut seen = vec![false; total];
        let mut out = Vec::new();
        for start in 0..total {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut cusp_corners = Vec::new();
            let mut h = start;
            loop {
                seen[h] = true;
                walk.push(h);
                let arrive = h ^ 1;
                let next = self.successor(arrive);
                let (sa, sn) = (self.slots[arrive], self.slots[next]);
                if sa.side == sn.side {
                    cusp_corners.push(walk.len());
                }
                h = next;
                if h == start {
                    break;
                }
            }
            let len = walk.len();
            let cusp_before: Vec<usize> = cusp_corners.iter().map(|&c| c % len).collect();
            let inner = walk.iter().all(|&h| self.kinds[h / 2] == EdgeKind::Infinitesimal);
            out.push(BoundaryComponent {
                edges: walk.iter().map(|&h| h / 2).collect(),
                walk,
                cusps: cusp_before.len(),
                cusp_before,
                inner,
            });
        }
        out
    }

    /// `r_c`: along the walk of `c`, the stretch between consecutive cusps
    /// numbered `k` contributes `(-1)^k` to each edge it traverses. A
    /// cusp-free component contributes `+1` everywhere.
    pub fn radical_element(&self, c: &BoundaryComponent, index: usize) -> Result<Vector> {
        if c.cusps % 2 == 1 {
            return Err(Error::OddCusps {
                component: index,
                cusps: c.cusps,
            });
        }
        let mut r = vec![BigRational::zero(); self.edge_count()];
        let len = c.walk.len();
        let start = c.cusp_before.first().copied().unwrap_or(0);
        let mut k = 0u32;
        for step in 0..len {
            let i = (start + step) % len;
            if step > 0 && c.cusp_before.contains(&i) {
                k += 1;
            }
            let sign = if k.is_multiple_of(2) { 1 } else { -1 };
            r[c.edges[i]] += BigRational::from_integer(BigInt::from(sign));
        }
        Ok(r)
    }

    /// `(component index, r_c)` for every even-pronged component.
    pub fn radical_elements(&self) -> Vec<(usize, Vector)> {
        self.boundary_components()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.cusps % 2 == 0)
            .map(|(i, c)| (i, self.radical_element(c, i).expect("even")))
            .collect()
    }

    /// Gram matrix of `ω` in the weight-space basis, entry by entry.
    pub fn gram_pairwise(&self, ws: &WeightSpace) -> Vec<Vector> {
        ws.basis
            .iter()
            .map(|x| {
                ws.basis
                    .iter()
                    .map(|y| self.thurston_form_unchecked(x, y))
                    .collect()
            })
            .collect()
    }

    /// Gram matrix as `Bᵀ Ω B`.
    pub fn gram_congruence(&self, ws: &WeightSpace) -> Vec<Vector> {
        let omega = self.edge_form_matrix();
        let ob: Vec<Vector> = ws.basis.iter().map(|b| linalg::mat_vec(&omega, b)).collect();
        ws.basis
            .iter()
            .map(|x| ob.iter().map(|oy| linalg::dot(x, oy)).collect())
            .collect()
    }

    /// Radical of `ω` as a subspace of edge space, with the radical elements
    /// and how they compare with it.
    pub fn radical(&self) -> Result<RadicalReport> {
        if !self.is_standardly_embedded() {
            return Err(Error::InvalidTrack("radical elements need a standardly embedded track".into()));
        }
        let ws = self.weight_space();
        let gram = self.gram_pairwise(&ws);
        let gram_two_ways_agree = gram == self.gram_congruence(&ws);
        let kernel = linalg::kernel(&gram, ws.dim());
        let radical_basis: Vec<Vector> = kernel
            .iter()
            .map(|x| {
                let v = (0..ws.edge_count)
                    .map(|e| ws.basis.iter().zip(x).map(|(b, c)| &b[e] * c).sum())
                    .collect();
                linalg::primitive_integer(v)
            })
            .collect();
        let elements = self.radical_elements();
        let in_weight_space = elements
            .iter()
            .all(|(_, r)| self.switch_violation(r).is_none());
        let in_radical = in_weight_space
            && elements.iter().all(|(_, r)| {
                ws.basis
                    .iter()
                    .all(|b| self.thurston_form_unchecked(r, b).is_zero())
            });
        let vectors: Vec<Vector> = elements.iter().map(|(_, r)| r.clone()).collect();
        let span_dim = linalg::rank(&vectors, self.edge_count());
        let radical_dim = radical_basis.len();
        Ok(RadicalReport {
            weight_space_dim: ws.dim(),
            switch_rank: ws.switch_rank,
            gram_rank: linalg::rank(&gram, ws.dim()),
            gram_two_ways_agree,
            radical_dim,
            radical_basis: radical_basis.iter().map(|v| render(v)).collect(),
            radical_elements: elements
                .iter()
                .map(|(c, r)| RadicalElement {
                    component: *c,
                    weights: render(r),
                })
                .collect(),
            elements_in_weight_space: in_weight_space,
            elements_in_radical: in_radical,
            span_dim,
            span_equals_radical: in_radical && span_dim == radical_dim,
        })
    }

    /// Every fixture-level invariant at once, for reports.
    pub fn report(&self) -> Result<TrackReport> {
        let ws = self.weight_space();
        let components = self.boundary_components();
        let radical = if self.is_standardly_embedded() {
            Some(self.radical()?)
        } else {
            None
        };
        Ok(TrackReport {
            vertices: self.vertex_count(),
            edges: self.edge_count(),
            real_edges: self.real_edges().len(),
            infinitesimal_edges: self.infinitesimal_edges().len(),
            standardly_embedded: self.is_standardly_embedded(),
            weight_space_dim: ws.dim(),
            weight_space_basis: ws.basis.iter().map(|v| render(v)).collect(),
            boundary_components: components
                .iter()
                .map(|c| ComponentSummary {
                    edges: c.edges.clone(),
                    cusps: c.cusps,
                    inner: c.inner,
                })
                .collect(),
            walk_length_total: components.iter().map(|c| c.walk.len()).sum(),
            radical,
        })
    }
}

fn render(v: &[BigRational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    pub edge_count: usize,
    pub switch_rank: usize,
    /// Kernel vectors of the switch matrix, each a primitive integer vector.
    pub basis: Vec<Vector>,
}

impl WeightSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ c_i b_i`.
    pub fn combine(&self, coeffs: &[BigRational]) -> Vector {
        (0..self.edge_count)
            .map(|e| self.basis.iter().zip(coeffs).map(|(b, c)| &b[e] * c).sum())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryComponent {
    /// Half-edges by which the walk leaves successive vertices.
    pub walk: Vec<usize>,
    /// Edge traversed at each step.
    pub edges: Vec<usize>,
    pub cusps: usize,
    /// Steps `i` whose departure is preceded by a cusp.
    pub cusp_before: Vec<usize>,
    /// Every traversed edge is infinitesimal.
    pub inner: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RadicalElement {
    pub component: usize,
    pub weights: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RadicalReport {
    pub weight_space_dim: usize,
    pub switch_rank: usize,
    pub gram_rank: usize,
    pub gram_two_ways_agree: bool,
    pub radical_dim: usize,
    pub radical_basis: Vec<Vec<String>>,
    pub radical_elements: Vec<RadicalElement>,
    pub elements_in_weight_space: bool,
    pub elements_in_radical: bool,
    pub span_dim: usize,
    pub span_equals_radical: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentSummary {
    pub edges: Vec<usize>,
    pub cusps: usize,
    pub inner: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrackReport {
    pub vertices: usize,
    pub edges: usize,
    pub real_edges: usize,
    pub infinitesimal_edges: usize,
    pub standardly_embedded: bool,
    pub weight_space_dim: usize,
    pub weight_space_basis: Vec<Vec<String>>,
    pub boundary_components: Vec<ComponentSummary>,
    pub walk_length_total: usize,
    pub radical: Option<RadicalReport>,
}

impl fmt::Display for TrainTrack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "train track with {} vertices, {} edges",
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// Small hand-built tracks used by tests, examples and the CLI.
pub mod fixtures {
    use super::*;

    fn track(vertices: &[(&[usize], &[usize])], edges: &[([usize; 2], EdgeKind)]) -> TrainTrack {
        TrainTrack::from_json(&TrackJson {
            vertices: vertices
                .iter()
                .map(|(a, b)| VertexJson {
                    side_a: a.to_vec(),
                    side_b: b.to_vec(),
                })
                .collect(),
            edges: edges
                .iter()
                .map(|&(ends, kind)| EdgeJson { ends, kind })
                .collect(),
        })
        .expect("fixture is valid")
    }

    /// One vertex, one real loop leaving on side A and returning on side B.
    pub fn single_loop() -> TrainTrack {
        track(&[(&[0], &[1])], &[([0, 1], EdgeKind::Real)])
    }

    /// Infinitesimal `n`-gon; vertex `k` carries the polygon on side A and
    /// `spokes` real half-edges on side B. Real edges join consecutive
    /// spoke half-edges around the polygon, the last spoke closing up with
    /// the first.
    pub fn polygon(n: usize, spokes: usize) -> TrainTrack {
        assert!(n >= 1 && spokes >= 1);
        // half-edge ids: polygon edge k is (2k, 2k+1) from vertex k to k+1;
        // spokes follow
        let inf: Vec<([usize; 2], EdgeKind)> =
            (0..n).map(|k| ([2 * k, 2 * k + 1], EdgeKind::Infinitesimal)).collect();
        let base = 2 * n;
        let total_spokes = n * spokes;
        let spoke = |v: usize, s: usize| base + v * spokes + s;
        let mut vertices: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for v in 0..n {
            let outgoing = 2 * v;
            let incoming = 2 * ((v + n - 1) % n) + 1;
            let a = vec![outgoing, incoming];
            let b = (0..spokes).map(|s| spoke(v, s)).collect();
            vertices.push((a, b));
        }
        let mut edges = inf;
        // pair spoke i with spoke i+1 cyclically needs an even count; pair
        // i with i + total/2 otherwise keeps every vertex reachable
        if total_spokes.is_multiple_of(2) {
            for i in (0..total_spokes).step_by(2) {
                edges.push(([base + i, base + (i + 1) % total_spokes], EdgeKind::Real));
            }
        } else {
            panic!("polygon fixture needs an even number of spoke half-edges");
        }
        let vs: Vec<(&[usize], &[usize])> =
            vertices.iter().map(|(a, b)| (a.as_slice(), b.as_slice())).collect();
        track(&vs, &edges)
    }

    /// Infinitesimal bigon with one real edge joining its two vertices.
    pub fn bigon_with_real_edge() -> TrainTrack {
        polygon(2, 1)
    }

    /// Infinitesimal bigon with a real loop at each vertex.
    pub fn bigon_with_real_loops() -> TrainTrack {
        polygon(2, 2)
    }

    /// Two infinitesimal monogons joined by two real edges, one crossing
    /// the other's order at the second vertex.
    pub fn twisted_monogons() -> TrainTrack {
        track(
            &[(&[0, 1], &[4, 6]), (&[2, 3], &[7, 5])],
            &[
                ([0, 1], EdgeKind::Infinitesimal),
                ([2, 3], EdgeKind::Infinitesimal),
                ([4, 5], EdgeKind::Real),
                ([6, 7], EdgeKind::Real),
            ],
        )
    }

    pub fn all() -> Vec<(&'static str, TrainTrack)> {
        vec![
            ("single-loop", single_loop()),
            ("bigon-real-edge", bigon_with_real_edge()),
            ("bigon-real-loops", bigon_with_real_loops()),
            ("triangle", polygon(3, 2)),
            ("square", polygon(4, 1)),
            ("hexagon", polygon(6, 1)),
            ("twisted-monogons", twisted_monogons()),
        ]
    }
}
