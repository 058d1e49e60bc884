//! Floating-point complex roots. Used only as a flagged fallback and as a
//! cross-check oracle; nothing certified depends on it.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::IntPolynomial;
use crate::error::Result;

const MAX_ITERS: usize = 500;

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All complex roots of a polynomial with simple roots, by Aberth–Ehrlich
/// iteration followed by two Newton polishing steps.
pub fn simple_roots(p: &IntPolynomial) -> Vec<Complex64> {
    let Some(n) = p.degree() else {
        return Vec::new();
    };
    if n == 0 {
        return Vec::new();
    }
    let lead = p.leading().unwrap().to_f64().unwrap();
    let c: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|x| x.to_f64().unwrap() / lead)
        .collect();
    let radius = c[..n]
        .iter()
        .map(|a| a.abs())
        .fold(0.0f64, f64::max)
        .max(1e-3)
        .min(1e3)
        .powf(1.0 / n as f64);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    for _ in 0..MAX_ITERS {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (pv, dpv) = horner(&c, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dpv;
            let sum: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..2 {
            let (pv, dpv) = horner(&c, *zi);
            let step = pv / dpv;
            if step.is_finite() {
                *zi -= step;
            }
        }
    }
    z
}

/// Complex roots with multiplicities, via the exact square-free
/// decomposition (so each numeric solve only sees simple roots).
pub fn roots_with_multiplicity(p: &IntPolynomial) -> Result<Vec<(Complex64, u32)>> {
    let mut out = Vec::new();
    for (factor, mult) in p.square_free_decomposition()? {
        out.extend(simple_roots(&factor).into_iter().map(|z| (z, mult)));
    }
    Ok(out)
}

/// Roots repeated according to multiplicity.
pub fn roots(p: &IntPolynomial) -> Result<Vec<Complex64>> {
    Ok(roots_with_multiplicity(p)?
        .into_iter()
        .flat_map(|(z, m)| std::iter::repeat_n(z, m as usize))
        .collect())
}
