mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use stretch_lab::classify::{is_reciprocal, is_skew_reciprocal, parity_condition, strip_cyclotomic};
use stretch_lab::curvegraph::{verify_clique_identity, Caps};
use stretch_lab::matrix::IntMatrix;
use stretch_lab::poly::{compare_roots, cyclotomic, largest_real_root};
use stretch_lab::search::{run_search, SearchConfig};
use stretch_lab::traintrack::fixtures;
use stretch_lab::{IntPolynomial, Tolerance};

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 1..=max_len)
}

fn small_matrix(max_n: usize, max_entry: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..=max_entry, n * n).prop_map(move |e| IntMatrix::from_flat_i64(n, &e).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn divrem_reconstructs(a in coeffs(8), b in coeffs(5)) {
        let a = IntPolynomial::from_coeffs(&a);
        let mut b = IntPolynomial::from_coeffs(&b);
        if b.is_zero() {
            b = IntPolynomial::one();
        }
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn reciprocal_times_skew_satisfies_parity(s1 in coeffs(4), s2 in coeffs(4), lead1 in prop::bool::ANY, lead2 in prop::bool::ANY) {
        let mut s1 = s1;
        s1.push(if lead1 { 1 } else { -1 });
        let mut s2 = s2;
        s2.push(if lead2 { 1 } else { -1 });
        let p = substitute_trace(&s1, 1);
        let q = substitute_trace(&s2, -1);
        prop_assert!(is_reciprocal(&p).unwrap().is_some());
        if !q.constant_term().is_zero() {
            prop_assert!(is_skew_reciprocal(&q).unwrap().is_some());
        }
        prop_assert!(parity_condition(&(&p * &q)));
    }

    #[test]
    fn strip_recompose_exact(s in coeffs(3), ms in prop::collection::vec(1u64..=15, 0..4)) {
        let mut s = s;
        s.push(1);
        let core = substitute_trace(&s, -1);
        prop_assume!(!core.constant_term().is_zero());
        let mut p = core;
        for m in &ms {
            p = &p * &cyclotomic(*m).unwrap();
        }
        let (part, stripped) = strip_cyclotomic(&p).unwrap();
        prop_assert_eq!(&part * &stripped, p);
        prop_assert!(is_skew_reciprocal(&stripped).unwrap().is_some());
    }

    #[test]
    fn enclosure_brackets_known_root(a in 0i64..=8, roots in prop::collection::vec(-6i64..=6, 0..4)) {
        let quad = poly(&[-1, -a, 1]);
        let mut p = quad.clone();
        for r in &roots {
            p = &p * &poly(&[-r, 1]);
        }
        let tol = Tolerance::default();
        let e = largest_real_root(&p, tol).unwrap();
        let (lo, hi) = (e.lo.to_rational(), e.hi.to_rational());
        prop_assert!(&hi - &lo <= tol.as_dyadic().to_rational());
        let top = roots.iter().copied().max().unwrap_or(i64::MIN);
        let q_root = (a as f64 + ((a * a + 4) as f64).sqrt()) / 2.0;
        if roots.is_empty() || (top as f64) < q_root {
            prop_assert!(quad.eval_rational(&lo).is_negative());
            prop_assert!(!quad.eval_rational(&hi).is_negative());
        } else {
            let r = BigRational::from_integer(BigInt::from(top));
            prop_assert!(lo < r && r <= hi);
        }
    }

    #[test]
    fn compare_roots_agrees_with_floats(a in 1i64..=9, b in 1i64..=9) {
        let pa = poly(&[-1, -a, 1]);
        let pb = poly(&[-1, 0, -b, 1]);
        let ra = largest_real_root(&pa, Tolerance::default()).unwrap();
        let rb = largest_real_root(&pb, Tolerance::default()).unwrap();
        let fa = f64_largest_root(&pa).unwrap();
        let fb = f64_largest_root(&pb).unwrap();
        prop_assume!((fa - fb).abs() > 1e-9);
        prop_assert_eq!(compare_roots(&ra, &rb).unwrap(), fa.partial_cmp(&fb).unwrap());
    }

    #[test]
    fn char_poly_matches_faddeev_leverrier(a in small_matrix(5, 4)) {
        prop_assert_eq!(a.char_poly(), faddeev_leverrier(&a));
    }

    #[test]
    fn clique_identity_random(a in small_matrix(5, 3)) {
        prop_assert!(verify_clique_identity(&a, Caps::default()).unwrap());
    }

    #[test]
    fn primitivity_criteria_agree(a in small_matrix(5, 1)) {
        let g = a.is_primitive();
        prop_assert_eq!(g, a.wielandt_primitive());
        prop_assert_eq!(g, primitive_by_powers(&a));
    }

    #[test]
    fn thurston_form_is_bilinear_and_alternating(seed in any::<u64>(), which in 0usize..7) {
        use rand::Rng;
        let (name, t) = fixtures::all().swap_remove(which);
        let ws = t.weight_space();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || -> Vec<BigRational> {
            let c: Vec<BigRational> = (0..ws.dim())
                .map(|_| BigRational::new(rng.gen_range(-20..=20).into(), rng.gen_range(1..=7).into()))
                .collect();
            ws.combine(&c)
        };
        let (x, y, z) = (draw(), draw(), draw());
        let om = |u: &[BigRational], v: &[BigRational]| t.thurston_form(u, v).unwrap();
        prop_assert!(om(&x, &x).is_zero(), "{}", name);
        prop_assert_eq!(om(&x, &y), -om(&y, &x));
        let two = BigRational::from_integer(2.into());
        let xz: Vec<BigRational> = x.iter().zip(&z).map(|(p, q)| p * &two - q).collect();
        prop_assert_eq!(om(&xz, &y), om(&x, &y) * &two - om(&z, &y));
    }
}

#[test]
fn search_is_independent_of_thread_count() {
    let mut results = Vec::new();
    for threads in [1, 3, 8] {
        let mut cfg = SearchConfig::new(3, 1);
        cfg.threads = Some(threads);
        results.push(serde_json::to_string(&run_search(&cfg).unwrap()).unwrap());
    }
    assert!(results.windows(2).all(|w| w[0] == w[1]));
}
