//! Triangle census of a coloring read from a `.gec` file (or a random one),
//! plus its protected and star-free edges.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gallai::census::{find_rainbow_triangle, CensusReport};
use gallai::construct::random::random_coloring;
use gallai::{find_mono_subgraph, Coloring, MonoKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c: Coloring = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?.parse()?,
        None => random_coloring(12, 3, &mut ChaCha8Rng::seed_from_u64(1)),
    };
    let report = CensusReport::new(&c, Some(3));
    println!("n = {}, k = {}", report.n, report.k);
    for (color, count) in &report.mono {
        println!("  color {color}: {count} monochromatic triangles");
    }
    println!("  bichromatic: {}", report.bichromatic);
    println!("  rainbow: {}", report.rainbow);
    println!("  protected edges: {}", report.protected_edges);
    if let Some(nim) = &report.nim_star_edges {
        println!("  edges in no monochromatic K_(1,{}): {}", nim.h, nim.edges);
    }
    if let Some([a, b, d]) = find_rainbow_triangle(&c) {
        println!("first rainbow triangle: {} {} {}", a + 1, b + 1, d + 1);
    }
    for color in 1..=c.k() as u8 {
        let r = find_mono_subgraph(&c, color, MonoKind::K4);
        if let Some(w) = r.witness {
            println!("color {color} contains a K4 on {w:?}");
        }
    }
    Ok(())
}
