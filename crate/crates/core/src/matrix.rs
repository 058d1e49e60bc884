//! Square integer matrices: characteristic polynomials, determinants,
//! primitivity, spectral radii and companion matrices.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{self, numeric, IntPolynomial, RootEnclosure, Tolerance, ValueEnclosure};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: Vec<Vec<serde_json::Value>>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("matrix must have at least one row".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "row {i} has {} entries, expected {n}",
                    r.len()
                )));
            }
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix { n, entries })
    }

    /// Row-major entries; `entries.len()` must be a positive square.
    pub fn from_flat(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "{} entries do not form a {n}×{n} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_flat_i64(n: usize, entries: &[i64]) -> Result<Self> {
        Self::from_flat(n, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    /// Row-major entries, the order used for lexicographic tie-breaks.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.entries.iter().any(|x| x.is_negative())
    }

    pub fn first_negative(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|x| x.is_negative())
            .map(|k| (k / self.n, k % self.n))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.n != other.n {
            return Err(Error::InvalidArgument("dimension mismatch".into()));
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Characteristic polynomial `det(tI - A)` by Berkowitz's division-free
    /// algorithm. Each step extends the leading principal submatrix by one
    /// row and column and multiplies by a Toeplitz matrix built from
    /// `R·A^j·C`.
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.n;
        // nonzero entries per row, ascending column
        let sparse: Vec<Vec<(usize, &BigInt)>> = (0..n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        // coefficients high degree first
        let mut p: Vec<BigInt> = vec![BigInt::one()];
        for k in 0..n {
            // A_k is the leading (k+1)×(k+1) block; split off row/column k.
            let r: Vec<(usize, &BigInt)> =
                sparse[k].iter().copied().take_while(|&(j, _)| j < k).collect();
            let mut toeplitz = Vec::with_capacity(k + 2);
            toeplitz.push(BigInt::one());
            toeplitz.push(-self.get(k, k));
            // v = A_{k-1}^j · C, starting at j = 0
            let mut v: Vec<BigInt> = (0..k).map(|i| self.get(i, k).clone()).collect();
            for step in 0..k {
                let rv: BigInt = r
                    .iter()
                    .filter(|(j, _)| !v[*j].is_zero())
                    .map(|&(j, a)| a * &v[j])
                    .sum();
                toeplitz.push(-rv);
                if step + 1 < k {
                    v = (0..k)
                        .map(|i| {
                            sparse[i]
                                .iter()
                                .take_while(|&&(j, _)| j < k)
                                .filter(|(j, _)| !v[*j].is_zero())
                                .map(|&(j, a)| a * &v[j])
                                .sum()
                        })
                        .collect();
                }
            }
            // p_new = T · p, T lower-triangular Toeplitz of shape (k+2)×(k+1)
            let mut next = vec![BigInt::zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, pj) in p.iter().enumerate().take(i + 1) {
                    let t = &toeplitz[i - j];
                    if !t.is_zero() && !pj.is_zero() {
                        *slot += t * pj;
                    }
                }
            }
            p = next;
        }
        p.reverse();
        IntPolynomial::new(p)
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn in_glnz(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Adjacency lists `i -> j` for the positive entries.
    fn successors(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| (0..self.n).filter(|&j| self.get(i, j).is_positive()).collect())
            .collect()
    }

    /// Graph-theoretic primitivity: nonnegative, strongly connected and of
    /// period 1. The period is the gcd of `level(u) + 1 - level(v)` over all
    /// edges `u -> v`, with BFS levels from vertex 0.
    pub fn primitivity(&self) -> PrimitivityReport {
        let n = self.n;
        let nonnegative = self.is_nonnegative();
        let succ = self.successors();
        let mut pred = vec![Vec::new(); n];
        for (u, vs) in succ.iter().enumerate() {
            for &v in vs {
                pred[v].push(u);
            }
        }
        let forward = bfs_levels(&succ, 0);
        let backward = bfs_levels(&pred, 0);
        let strongly_connected =
            forward.iter().all(Option::is_some) && backward.iter().all(Option::is_some);
        let mut period = 0u64;
        if strongly_connected {
            for (u, vs) in succ.iter().enumerate() {
                for &v in vs {
                    let lu = forward[u].unwrap() as i64;
                    let lv = forward[v].unwrap() as i64;
                    period = period.gcd(&((lu + 1 - lv).unsigned_abs()));
                }
            }
        }
        PrimitivityReport {
            nonnegative,
            strongly_connected,
            period,
            primitive: nonnegative && strongly_connected && period == 1,
        }
    }

    pub fn is_primitive(&self) -> bool {
        self.primitivity().primitive
    }

    /// Wielandt's criterion: a nonnegative `n×n` matrix is primitive iff
    /// `A^((n-1)²+1)` is entry-wise positive. Computed on the boolean
    /// pattern by repeated squaring.
    pub fn wielandt_primitive(&self) -> bool {
        if !self.is_nonnegative() {
            return false;
        }
        let n = self.n;
        let pattern: Vec<bool> = self.entries.iter().map(|x| x.is_positive()).collect();
        let exponent = (n - 1) * (n - 1) + 1;
        let power = bool_pow(&pattern, n, exponent);
        power.iter().all(|&b| b)
    }

    /// Perron root: the largest real root of the characteristic polynomial.
    /// For matrices with a negative entry the Perron-Frobenius guarantee is
    /// absent, so every eigenvalue modulus is checked numerically against it.
    pub fn spectral_radius(&self, tol: Tolerance) -> Result<RootEnclosure> {
        let chi = self.char_poly();
        let rho = match poly::largest_real_root(&chi, tol) {
            Ok(e) => e,
            Err(Error::NoRealRoot) => {
                return Err(Error::PerronViolated(
                    "characteristic polynomial has no real root".into(),
                ))
            }
            Err(e) => return Err(e),
        };
        if !self.is_nonnegative() {
            let r = rho.hi.to_f64();
            let max_modulus = numeric::roots(&chi)?
                .iter()
                .map(|z| z.norm())
                .fold(0.0f64, f64::max);
            if max_modulus > r + poly::UNIT_CIRCLE_TOL {
                return Err(Error::PerronViolated(format!(
                    "a complex eigenvalue has modulus {max_modulus:.12} above the largest real eigenvalue {r:.12}"
                )));
            }
        }
        Ok(rho)
    }

    /// `ρ(A)^n` as an interval, together with the enclosure of `ρ(A)`.
    pub fn normalized_spectral_radius(&self, tol: Tolerance) -> Result<(RootEnclosure, ValueEnclosure)> {
        let rho = self.spectral_radius(tol)?;
        let value = rho.pow(self.n as u32);
        Ok((rho, value))
    }

    /// Companion matrix with the negated coefficients in the last row:
    /// ones on the superdiagonal, last row `(-c_0, ..., -c_{n-1})`.
    pub fn companion(p: &IntPolynomial) -> Result<IntMatrix> {
        let n = p.checked_degree()?;
        if n == 0 {
            return Err(Error::InvalidArgument("companion of a constant".into()));
        }
        if !p.is_monic() {
            return Err(Error::NotMonic);
        }
        let mut m = Self::zero(n);
        for i in 0..n - 1 {
            m.set(i, i + 1, BigInt::one());
        }
        for j in 0..n {
            m.set(n - 1, j, -p.coeff(j));
        }
        Ok(m)
    }

    /// Block form `[[P, *], [0, F]]` with `P` the upper-left `split×split`
    /// permutation matrix and a zero lower-left block. Out-of-range splits
    /// give `false`.
    pub fn verify_block_structure(&self, split: usize) -> bool {
        let n = self.n;
        if split == 0 || split >= n {
            return false;
        }
        let lower_left_zero = (split..n).all(|i| (0..split).all(|j| self.get(i, j).is_zero()));
        let is_permutation = (0..split).all(|i| {
            let row = &self.row(i)[..split];
            row.iter().all(|x| x.is_zero() || x.is_one()) && row.iter().filter(|x| x.is_one()).count() == 1
        }) && (0..split).all(|j| (0..split).filter(|&i| self.get(i, j).is_one()).count() == 1);
        lower_left_zero && is_permutation
    }

    pub fn max_entry(&self) -> BigInt {
        self.entries.iter().max().cloned().unwrap_or_default()
    }

    /// Entries as `i64`, when they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: (0..self.n)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .map(|x| serde_json::Value::String(x.to_string()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        let n = json.rows.len();
        if n == 0 {
            return Err(Error::parse("rows", "matrix must have at least one row"));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in json.rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::parse(
                    format!("rows[{i}]"),
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            for (j, v) in row.iter().enumerate() {
                let field = || format!("rows[{i}][{j}]");
                let x = match v {
                    serde_json::Value::String(s) => s
                        .trim()
                        .parse::<BigInt>()
                        .map_err(|e| Error::parse(field(), e))?,
                    serde_json::Value::Number(num) => num
                        .as_i64()
                        .map(BigInt::from)
                        .ok_or_else(|| Error::parse(field(), "not an integer"))?,
                    _ => return Err(Error::parse(field(), "expected an integer string")),
                };
                entries.push(x);
            }
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let json: MatrixJson =
            serde_json::from_str(text).map_err(|e| Error::parse("rows", e))?;
        Self::from_json(&json)
    }
}

fn bfs_levels(adj: &[Vec<usize>], start: usize) -> Vec<Option<usize>> {
    let mut level = vec![None; adj.len()];
    level[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let lu = level[u].unwrap();
        for &v in &adj[u] {
            if level[v].is_none() {
                level[v] = Some(lu + 1);
                queue.push_back(v);
            }
        }
    }
    level
}

fn bool_mul(a: &[bool], b: &[bool], n: usize) -> Vec<bool> {
    let mut out = vec![false; n * n];
    for i in 0..n {
        for k in 0..n {
            if a[i * n + k] {
                for j in 0..n {
                    out[i * n + j] |= b[k * n + j];
                }
            }
        }
    }
    out
}

fn bool_pow(a: &[bool], n: usize, mut e: usize) -> Vec<bool> {
    let mut result: Vec<bool> = (0..n * n).map(|k| k / n == k % n).collect();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = bool_mul(&result, &base, n);
        }
        base = bool_mul(&base, &base, n);
        e >>= 1;
    }
    result
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitivityReport {
    pub nonnegative: bool,
    pub strongly_connected: bool,
    /// gcd of directed cycle lengths; 0 when the graph has no cycle.
    pub period: u64,
    pub primitive: bool,
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{self}")
    }
}

impl PartialOrd for IntMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Dimension first, then lexicographic on the row-major entries.
impl Ord for IntMatrix {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n.cmp(&other.n).then_with(|| self.entries.cmp(&other.entries))
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = MatrixJson::deserialize(d)?;
        IntMatrix::from_json(&json).map_err(serde::de::Error::custom)
    }
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
    fn characteristic_polynomials() {
        assert_eq!(fibonacci_matrix().char_poly(), p(&[-1, -1, 1]));
        assert_eq!(punctured_torus_matrix().char_poly(), p(&[-1, -2, -1, 0, 1]));
        assert_eq!(IntMatrix::identity(3).char_poly(), p(&[-1, 1]).pow(3));
        assert_eq!(m(&[&[5]]).char_poly(), p(&[-5, 1]));
        // trace 5, det -2
        assert_eq!(m(&[&[1, 2], &[3, 4]]).char_poly(), p(&[-2, -5, 1]));
    }

    #[test]
    fn determinants() {
        assert_eq!(punctured_torus_matrix().det(), BigInt::from(-1));
        assert!(punctured_torus_matrix().in_glnz());
        assert_eq!(IntMatrix::identity(4).det(), BigInt::one());
        let d = m(&[&[2, 0], &[0, 1]]);
        assert_eq!(d.det(), BigInt::from(2));
        assert!(!d.in_glnz());
        // needs a row swap
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), BigInt::from(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), BigInt::zero());
    }

    #[test]
    fn primitivity_examples() {
        assert!(fibonacci_matrix().is_primitive());
        let swap = m(&[&[0, 1], &[1, 0]]).primitivity();
        assert!(swap.strongly_connected);
        assert_eq!(swap.period, 2);
        assert!(!swap.primitive);
        assert!(punctured_torus_matrix().is_primitive());
        assert!(punctured_torus_matrix().wielandt_primitive());
        assert!(!IntMatrix::identity(2).is_primitive());
        assert!(!m(&[&[1, -1], &[1, 1]]).is_primitive());
        assert_eq!(m(&[&[0]]).primitivity().period, 0);
        assert!(m(&[&[2]]).is_primitive());
    }

    #[test]
    fn radii() {
        let tol = Tolerance::default();
        let (_, v) = fibonacci_matrix().normalized_spectral_radius(tol).unwrap();
        assert!((v.midpoint_f64() - 2.618_033_988_749_895).abs() < 1e-9);
        let (_, v) = punctured_torus_matrix().normalized_spectral_radius(tol).unwrap();
        assert!((v.midpoint_f64() - 6.854_101_966_249_685).abs() < 1e-9);
        let c = IntMatrix::companion(&p(&[-1, -2, 0, 1])).unwrap();
        let (_, v) = c.normalized_spectral_radius(tol).unwrap();
        assert!((v.midpoint_f64() - 4.236_067_977_499_79).abs() < 1e-9);
        // rotation by 90 degrees: no real eigenvalue
        assert!(matches!(
            m(&[&[0, -1], &[1, 0]]).spectral_radius(tol),
            Err(Error::PerronViolated(_))
        ));
    }

    #[test]
    fn companion_convention() {
        let c = IntMatrix::companion(&p(&[-1, -1, 1])).unwrap();
        assert_eq!(c, m(&[&[0, 1], &[1, 1]]));
        for q in [p(&[-1, -2, 0, 1]), p(&[-1, -1, 0, -1, 1])] {
            assert_eq!(IntMatrix::companion(&q).unwrap().char_poly(), q);
        }
        assert_eq!(IntMatrix::companion(&p(&[1, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn block_structure() {
        assert!(m(&[&[1, 0, 5], &[0, 1, 7], &[0, 0, 3]]).verify_block_structure(2));
        assert!(!m(&[&[0, 1, 0], &[1, 0, 0], &[1, 0, 2]]).verify_block_structure(2));
        assert!(!m(&[&[2, 0, 1], &[0, 1, 0], &[0, 0, 3]]).verify_block_structure(2));
        assert!(m(&[&[0, 1, 4], &[1, 0, 0], &[0, 0, 3]]).verify_block_structure(2));
        assert!(!IntMatrix::identity(3).verify_block_structure(0));
    }

    #[test]
    fn json_round_trip() {
        let a = punctured_torus_matrix();
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(IntMatrix::parse_json(&text).unwrap(), a);
        let err = IntMatrix::parse_json(r#"{"rows":[["1","x"],["0","1"]]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { ref field, .. } if field == "rows[0][1]"));
        assert!(IntMatrix::parse_json(r#"{"rows":[["1"],["0","1"]]}"#).is_err());
    }
}
