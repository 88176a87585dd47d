//! Extended colorings that also color vertices: the bundled 10-vertex
//! example and exhaustive searches for the largest small cases.

use gallai::construct::construct_gr_k3_extremal;
use gallai::grstar::{check_gr_star_conditions, figure1_fixture, max_gr_star_witness, ExtendedColoring};
use gallai::search::SearchOptions;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = figure1_fixture();
    println!("fixture: {} vertices, {} colors, singleton colors {:?}", f.n(), f.k(), f.singletons());
    println!("  {:?}", check_gr_star_conditions(&f));

    // any triangle-free Gallai 3-coloring extends with a fourth color on all vertices
    let base = construct_gr_k3_extremal(3)?.with_k(4)?;
    let e = ExtendedColoring::with_constant_singletons(base, 4)?;
    println!("constant singletons: passes = {}", check_gr_star_conditions(&e).passes());

    let opts = SearchOptions::default();
    for k in 2..=3 {
        for n in 1..=7 {
            let r = max_gr_star_witness(n, k, &opts)?;
            println!("k = {k}, n = {n}: {}", if r.exists { "exists" } else { "none" });
            if !r.exists {
                break;
            }
        }
    }
    if let Some(w) = max_gr_star_witness(5, 3, &opts)?.witness {
        print!("a witness for n = 5, k = 3:\n{w}");
    }
    Ok(())
}
