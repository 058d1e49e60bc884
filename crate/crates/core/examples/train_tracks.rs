//! Weight spaces, boundary components, the Thurston form and its radical
//! on the bundled train-track fixtures.
//!
//!     cargo run --example train_tracks

use stretch_lab::traintrack::fixtures;
use stretch_lab::Result;

fn main() -> Result<()> {
    for (name, t) in fixtures::all() {
        let r = t.report()?;
        let cusps: Vec<usize> = r.boundary_components.iter().map(|c| c.cusps).collect();
        println!(
            "{name}: |V| = {}, |E| = {}, dim W = {}, cusps per component {cusps:?}",
            r.vertices, r.edges, r.weight_space_dim
        );
        if let Some(rad) = r.radical {
            println!(
                "  rank omega {}, radical dim {}, span of r_c {}, r_c in radical {}, equal {}",
                rad.gram_rank, rad.radical_dim, rad.span_dim, rad.elements_in_radical, rad.span_equals_radical
            );
        }
    }
    let t = fixtures::bigon_with_real_edge();
    println!("{}", serde_json::to_string(t.to_json()).expect("json"));
    Ok(())
}
