//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runtime budgets are part of each criterion.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use stretch_lab::classify::{
    classify, is_reciprocal, is_skew_reciprocal, parity_condition, quartic_is_irreducible,
    sqrt_min_poly, strip_cyclotomic,
};
use stretch_lab::constants::{golden, lehmer, lt12, punctured_torus_matrix, silver};
use stretch_lab::curvegraph::{verify_clique_identity, Caps};
use stretch_lab::families::{enumerate, enumerate_admissible, monotonicity_scan, FormTag, ScanBranch, DEFAULT_MAX_DEGREE};
use stretch_lab::poly::{cyclotomic, largest_real_root, unit_circle_root_count, Certainty};
use stretch_lab::search::{run_search, SearchConfig};
use stretch_lab::sharpness::{build_example, convergence_table};
use stretch_lab::traintrack::fixtures;
use stretch_lab::{IntPolynomial, Tolerance};

type Check = Vec<String>;

fn expect(fails: &mut Check, ok: bool, what: impl Into<String>) {
    if !ok {
        fails.push(what.into());
    }
}

fn close(fails: &mut Check, got: f64, want: f64, tol: f64, what: &str) {
    expect(fails, (got - want).abs() < tol, format!("{what}: got {got}, want {want} ± {tol}"));
}

fn tol() -> Tolerance {
    Tolerance::default()
}

fn punctured_torus_fixture() -> Check {
    let mut f = Check::new();
    let a = punctured_torus_matrix();
    let chi = a.char_poly();
    let want = poly(&[-1, -2, -1, 0, 1]);
    expect(&mut f, chi == want, format!("char poly {chi}"));
    expect(&mut f, faddeev_leverrier(&a) == want, "Faddeev-LeVerrier oracle disagrees");
    expect(&mut f, a.is_primitive() && primitive_by_powers(&a), "not primitive");
    expect(&mut f, a.det() == BigInt::from(-1), format!("det {}", a.det()));
    let c = classify(&chi).unwrap();
    expect(&mut f, c.skew_up_to_cyclotomic, "not skew-reciprocal up to cyclotomic factors");
    expect(&mut f, c.cyclotomic_part == poly(&[1, 1, 1]), format!("cyclotomic part {}", c.cyclotomic_part));
    expect(&mut f, c.core == poly(&[-1, -1, 1]), format!("core {}", c.core));
    let (_, v) = a.normalized_spectral_radius(tol()).unwrap();
    close(&mut f, v.midpoint_f64(), MU.powi(4), 1e-9, "normalized rho");
    f
}

fn family_bound() -> Check {
    let mut f = Check::new();
    for n in [4, 5, 6, 7, 8, 9, 10, 12] {
        let e = enumerate(n, &FormTag::ALL, tol(), DEFAULT_MAX_DEGREE).unwrap();
        expect(&mut f, e.bound_holds(), format!("n = {n}: exact comparison places a value below 3 + 2√2"));
        for r in &e.admissible {
            let v = r.normalized.as_ref().unwrap().midpoint_f64();
            expect(&mut f, v >= SIGMA2 - 1e-9, format!("n = {n}: {} gives {v}", r.polynomial));
            let oracle = f64_largest_root(&r.polynomial).unwrap().powi(n as i32);
            expect(&mut f, (oracle - v).abs() < 1e-6 * v, format!("n = {n}: {} oracle {oracle} vs {v}", r.polynomial));
        }
        if n == 4 {
            let m = e.minimum().unwrap().normalized.as_ref().unwrap().midpoint_f64();
            close(&mut f, m, 6.854_101_966_2, 1e-9, "n = 4 minimum");
        }
    }
    f
}

fn matrix_search() -> Check {
    let mut f = Check::new();
    let mut cfg = SearchConfig::new(4, 1);
    cfg.threads = Some(8);
    let r = run_search(&cfg).unwrap();
    expect(&mut f, r.scanned == 65_536, format!("scanned {}", r.scanned));
    expect(&mut f, r.violations.is_empty(), format!("{} violations at n = 4", r.violations.len()));
    if let Some(m) = &r.minimum {
        let four = enumerate_admissible(4, &FormTag::ALL, tol()).unwrap();
        expect(
            &mut f,
            four.iter().any(|x| x.polynomial == m.char_poly),
            format!("n = 4 minimum {} missing from the family list", m.char_poly),
        );
        close(&mut f, m.normalized.decimal.parse().unwrap(), MU.powi(4), 1e-8, "n = 4 search minimum");
    } else {
        f.push("no qualifying matrix at n = 4".into());
    }
    for (n, want_poly, want) in [(2, poly(&[-1, -1, 1]), 2.618_033_988_7), (3, poly(&[-1, -2, 0, 1]), 4.236_067_977_5)] {
        let r = run_search(&SearchConfig::new(n, 2)).unwrap();
        let Some(m) = r.minimum else {
            f.push(format!("no witness at n = {n}"));
            continue;
        };
        expect(&mut f, m.char_poly == want_poly, format!("n = {n} witness {}", m.char_poly));
        let rho = f64_largest_root(&m.char_poly).unwrap();
        close(&mut f, rho.powi(n as i32), want, 1e-9, &format!("n = {n} witness oracle"));
        let root = largest_real_root(&m.char_poly, tol()).unwrap();
        close(&mut f, root.pow(n as u32).midpoint_f64(), want, 1e-9, &format!("n = {n} witness"));
        expect(&mut f, !r.violations.is_empty(), format!("n = {n} witness not below 3 + 2√2"));
    }
    f
}

fn clique_identity() -> Check {
    let mut f = Check::new();
    let caps = Caps::default();
    for n in 1..=4 {
        for a in all_binary(n) {
            if !verify_clique_identity(&a, caps).unwrap() {
                f.push(format!("identity fails for {a}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let n = rng.gen_range(1..=5);
        let a = random_matrix(&mut rng, n, 3);
        if !verify_clique_identity(&a, caps).unwrap() {
            f.push(format!("identity fails for {a}"));
        }
    }
    f
}

fn monotonicity() -> Check {
    let mut f = Check::new();
    let s13 = 13f64.sqrt();
    let s5 = 5f64.sqrt();
    for (branch, want) in [
        (ScanBranch::ThreeA1, SIGMA2),
        (ScanBranch::FourA1, ((3.0 + s13) / 2.0).powi(2)),
        (ScanBranch::FiveA1, (2.0 + s5).powi(2)),
    ] {
        match monotonicity_scan(branch, 12, 0..=5, tol()) {
            Ok(s) => {
                let start = s.values.iter().find(|v| v.offsets.iter().all(|&o| o == 0)).unwrap();
                close(&mut f, start.root.pow(12).midpoint_f64(), want, 1e-7, &format!("{branch:?} endpoint"));
                expect(&mut f, s.strictly_increasing, format!("{branch:?} not strictly increasing"));
            }
            Err(e) => f.push(format!("{branch:?}: {e}")),
        }
    }
    f
}

fn sharpness() -> Check {
    let mut f = Check::new();
    for k in 2..=40 {
        let e = build_example(k, tol()).unwrap();
        expect(&mut f, e.primitivity.primitive, format!("k = {k}: not primitive"));
        expect(&mut f, e.char_poly_matches, format!("k = {k}: char poly {}", e.char_poly));
        expect(&mut f, e.skew_up_to_cyclotomic, format!("k = {k}: not skew up to cyclotomic"));
        expect(&mut f, e.above_silver_squared, format!("k = {k}: not above 3 + 2√2"));
        let p = 2 * k;
        let want = IntPolynomial::from_terms(&[(1, p), (-1, e.p_k), (-1, p - e.p_k), (-1, 0)]);
        expect(&mut f, k > 12 || faddeev_leverrier(&e.matrix) == want, format!("k = {k}: oracle char poly"));
        if k == 2 {
            close(&mut f, e.normalized_value.midpoint_f64(), MU.powi(4), 1e-9, "P_2");
        }
        if k == 3 {
            close(&mut f, e.normalized_value.midpoint_f64(), 8.186, 5e-3, "P_3");
        }
    }
    let rows = convergence_table(200, tol()).unwrap();
    for r in &rows {
        expect(&mut f, r.above_silver_squared, format!("k = {}: P_k not above 3 + 2√2", r.k));
    }
    let last = rows.last().unwrap();
    close(&mut f, last.root.pow(400).midpoint_f64(), SIGMA2, 1e-3, "P_200");
    f
}

fn number_theory() -> Check {
    let mut f = Check::new();
    for (p, want, irreducible) in [(4, poly(&[1, 0, -4, 0, 1]), true), (5, poly(&[1, 0, -5, 0, 1]), true), (3, poly(&[1, 0, -3, 0, 1]), false)] {
        let (got, irr) = sqrt_min_poly(p, 1).unwrap();
        expect(&mut f, got == want, format!("sqrt_min_poly({p}, 1) = {got}"));
        expect(&mut f, irr == irreducible && quartic_is_irreducible(&got) == irreducible, format!("irreducibility of {got}"));
    }
    let factored = &poly(&[-1, -1, 1]) * &poly(&[-1, 1, 1]);
    expect(&mut f, factored == poly(&[1, 0, -3, 0, 1]), "x^4 - 3x^2 + 1 factorization oracle");
    for (name, p, count, power, want) in [("Lehmer", lehmer(), 8, 9, 4.311), ("LT", lt12(), 2, 3, 5.107)] {
        let (c, certainty) = unit_circle_root_count(&p).unwrap();
        expect(&mut f, c == count && certainty == Certainty::Exact, format!("{name}: {c} unit roots ({certainty:?})"));
        let v = largest_real_root(&p, tol()).unwrap().pow(power);
        close(&mut f, v.midpoint_f64(), want, 1e-3, &format!("{name}^{power}"));
    }
    let mu = largest_real_root(&golden(), tol()).unwrap();
    let sigma = largest_real_root(&silver(), tol()).unwrap();
    let mu2 = largest_real_root(&poly(&[1, -3, 1]), tol()).unwrap();
    expect(&mut f, mu.hi < sigma.lo && sigma.hi < mu2.lo, "mu < sigma < mu^2 not separated");
    f
}

fn properties() -> Check {
    let mut f = Check::new();
    let mut rng = ChaCha8Rng::seed_from_u64(8);

    for _ in 0..500 {
        let g1 = rng.gen_range(1..=4);
        let g2 = rng.gen_range(1..=4);
        let p = substitute_trace(&random_trace_poly(&mut rng, g1), 1);
        let q = substitute_trace(&random_trace_poly(&mut rng, g2), -1);
        expect(&mut f, is_reciprocal(&p).unwrap().is_some(), format!("{p} not reciprocal"));
        if !q.constant_term().is_zero() {
            expect(&mut f, is_skew_reciprocal(&q).unwrap().is_some(), format!("{q} not skew-reciprocal"));
        }
        let r = &p * &q;
        expect(&mut f, parity_condition(&r), format!("parity fails for {r}"));
    }

    for _ in 0..200 {
        let g = rng.gen_range(1..=3);
        let core = substitute_trace(&random_trace_poly(&mut rng, g), -1);
        if core.constant_term().is_zero() {
            continue;
        }
        let mut p = core.clone();
        for _ in 0..rng.gen_range(0..=3) {
            p = &p * &cyclotomic(rng.gen_range(1..=12)).unwrap();
        }
        let (part, stripped) = strip_cyclotomic(&p).unwrap();
        expect(&mut f, &part * &stripped == p, format!("strip/recompose of {p}"));
        expect(&mut f, is_skew_reciprocal(&stripped).unwrap().is_some(), format!("core of {p} not skew"));
    }

    let t = tol();
    for _ in 0..200 {
        let a: i64 = rng.gen_range(0..=6);
        let quad = poly(&[-1, -a, 1]);
        let mut p = quad.clone();
        let mut top = i64::MIN;
        for _ in 0..rng.gen_range(0..=3) {
            let r: i64 = rng.gen_range(-5..=5);
            top = top.max(r);
            p = &p * &poly(&[-r, 1]);
        }
        let e = largest_real_root(&p, t).unwrap();
        let (lo, hi) = (e.lo.to_rational(), e.hi.to_rational());
        expect(&mut f, hi.clone() - lo.clone() <= t.as_dyadic().to_rational(), format!("width for {p}"));
        let quad_root = (a as f64 + ((a * a + 4) as f64).sqrt()) / 2.0;
        if (top as f64) > quad_root {
            let r = BigRational::from_integer(top.into());
            expect(&mut f, lo < r && r <= hi, format!("{p}: integer root {top} outside enclosure"));
        } else {
            let s_lo = quad.eval_rational(&lo);
            let s_hi = quad.eval_rational(&hi);
            expect(&mut f, s_lo < BigRational::zero() && s_hi >= BigRational::zero(), format!("{p}: quadratic root outside enclosure"));
        }
    }

    for (name, tr) in fixtures::all() {
        let ws = tr.weight_space();
        let rand_w = |rng: &mut ChaCha8Rng| {
            let c: Vec<BigRational> = (0..ws.dim())
                .map(|_| BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into()))
                .collect();
            ws.combine(&c)
        };
        for _ in 0..20 {
            let (w1, w2, w3) = (rand_w(&mut rng), rand_w(&mut rng), rand_w(&mut rng));
            let om = |x: &[BigRational], y: &[BigRational]| tr.thurston_form(x, y).unwrap();
            expect(&mut f, om(&w1, &w1).is_zero(), format!("{name}: omega(w, w) != 0"));
            expect(&mut f, om(&w1, &w2) == -om(&w2, &w1), format!("{name}: not antisymmetric"));
            let a = BigRational::new(3.into(), 7.into());
            let b = BigRational::new((-2).into(), 5.into());
            let comb: Vec<BigRational> = w1.iter().zip(&w2).map(|(x, y)| &a * x + &b * y).collect();
            expect(&mut f, om(&comb, &w3) == &a * om(&w1, &w3) + &b * om(&w2, &w3), format!("{name}: not bilinear"));
        }
        if tr.is_standardly_embedded() {
            for (c, r) in tr.radical_elements() {
                for b in &ws.basis {
                    expect(&mut f, tr.thurston_form(&r, b).map(|x| x.is_zero()).unwrap_or(false), format!("{name}: r_{c} not in the radical"));
                }
            }
        }
        let switch: Vec<Vec<i64>> = tr
            .switch_matrix()
            .iter()
            .map(|row| row.iter().map(|x| x.to_integer().try_into().unwrap()).collect())
            .collect();
        let dim = tr.edge_count() - integer_rank(&switch);
        expect(&mut f, dim == ws.dim(), format!("{name}: weight space dim {} vs oracle {dim}", ws.dim()));
    }

    for n in 1..=3 {
        for a in all_binary(n) {
            let (g, w, p) = (a.is_primitive(), a.wielandt_primitive(), primitive_by_powers(&a));
            expect(&mut f, g == w && w == p, format!("primitivity disagreement on {a}"));
        }
    }
    f
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Check); 8] = [
        ("1 four-punctured torus matrix", Duration::from_secs(1), punctured_torus_fixture),
        ("2 family minimum bound", Duration::from_secs(60), family_bound),
        ("3 exhaustive matrix search", Duration::from_secs(300), matrix_search),
        ("4 clique polynomial identity", Duration::from_secs(60), clique_identity),
        ("5 monotonicity endpoints", Duration::from_secs(30), monotonicity),
        ("6 sharpness family", Duration::from_secs(60), sharpness),
        ("7 square roots, Salem numbers, ordering", Duration::from_secs(10), number_theory),
        ("8 property suites", Duration::from_secs(600), properties),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let mut fails = run();
        let elapsed = start.elapsed();
        if elapsed > budget {
            fails.push(format!("took {elapsed:?}, budget {budget:?}"));
        }
        if fails.is_empty() {
            println!("PASS  criterion {name}  ({:.2} s)", elapsed.as_secs_f64());
        } else {
            failed += 1;
            println!("FAIL  criterion {name}  ({:.2} s)", elapsed.as_secs_f64());
            for x in fails.iter().take(10) {
                println!("      {x}");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
