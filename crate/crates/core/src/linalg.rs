//! Exact linear algebra over ℚ on dense row-major matrices; just enough for
//! kernels and ranks of switch systems and Gram matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Vector = Vec<BigRational>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vector], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vector], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : M x = 0}`, one vector per free column, each scaled to a
/// primitive integer vector with positive leading entry.
pub fn kernel(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); ncols];
            x[f] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -m[i][f].clone();
            }
            primitive_integer(x)
        })
        .collect()
}

/// Scales a nonzero rational vector to coprime integers, first nonzero
/// entry positive.
pub fn primitive_integer(x: Vector) -> Vector {
    let lcm = x
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| (v * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return x;
    }
    let sign = if ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter()
        .map(|v| BigRational::from_integer(v / &g * &sign))
        .collect()
}

pub fn mat_vec(rows: &[Vector], x: &[BigRational]) -> Vector {
    rows.iter()
        .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn from_ints(v: &[i64]) -> Vector {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_small_system() {
        // x + y - z = 0, 2x + 2y - 2z = 0
        let m = vec![from_ints(&[1, 1, -1]), from_ints(&[2, 2, -2])];
        assert_eq!(rank(&m, 3), 1);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&m, v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![
            BigRational::new((-1).into(), 2.into()),
            BigRational::new(3.into(), 4.into()),
        ];
        assert_eq!(primitive_integer(v), from_ints(&[2, -3]));
    }
}
