//! Exhaustive search on small complete graphs: Goodman minima, the two
//! classical Ramsey brackets and the protected-edge maximum.

use std::time::Instant;

use gallai::search::{exists_avoiding, max_protected_edges, min_mono_triangles, SearchOptions, Target};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SearchOptions::default();

    for n in 3..=7 {
        let t = Instant::now();
        let out = min_mono_triangles(n, 2, false, &opts)?;
        println!(
            "min mono triangles, n = {n}, k = 2: {} ({} nodes, {:.2?})",
            out.value,
            out.nodes_explored,
            t.elapsed()
        );
    }

    let brackets = [
        ("K3/K3", [Target::K3, Target::K3], 5..=6),
        ("K4+e/K3", [Target::K4PlusE, Target::K3], 8..=9),
    ];
    for (name, targets, range) in brackets {
        for n in range {
            let t = Instant::now();
            let out = exists_avoiding(n, 2, &targets, false, &opts)?;
            println!(
                "{name} avoidable on K_{n}: {} ({} nodes, {:.2?})",
                out.value == 1,
                out.nodes_explored,
                t.elapsed()
            );
            if let Some(w) = out.witness {
                print!("{w}");
            }
        }
    }

    for gallai in [false, true] {
        let t = Instant::now();
        let out = min_mono_triangles(6, 3, gallai, &opts)?;
        println!("min mono triangles, n = 6, k = 3, gallai = {gallai}: {} ({:.2?})", out.value, t.elapsed());
    }

    for (n, k) in [(4, 2), (5, 2), (6, 3)] {
        let t = Instant::now();
        let out = max_protected_edges(n, k, &opts)?;
        println!(
            "max protected edges, n = {n}, k = {k}: {} ({} nodes, {:.2?})",
            out.value,
            out.nodes_explored,
            t.elapsed()
        );
    }
    Ok(())
}
