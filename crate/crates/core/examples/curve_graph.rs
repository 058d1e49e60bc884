//! Simple cycles, curve graph and clique polynomial of a small matrix, and
//! the identity `Q(t) = t^n χ_A(1/t)`.
//!
//!     cargo run --example curve_graph

use stretch_lab::constants::punctured_torus_matrix;
use stretch_lab::curvegraph::{analyze, reversed_char_poly, Caps};
use stretch_lab::{Result, Tolerance};

fn main() -> Result<()> {
    let a = punctured_torus_matrix();
    let r = analyze(&a, Caps::default(), Tolerance::default())?;
    for (c, w) in r.cycles.iter().zip(&r.weights) {
        println!("cycle {c:?} length {w}");
    }
    println!("disjoint pairs  {:?}", r.edges);
    println!("shape           {:?}", r.shape);
    println!("clique poly     {}", r.clique_poly);
    println!("t^n chi(1/t)    {}", reversed_char_poly(&a));
    println!("identity holds  {}", r.identity_ok);
    if let Some(g) = r.growth_rate {
        println!("growth rate     {}", g.decimal);
    }
    Ok(())
}
