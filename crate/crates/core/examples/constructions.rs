//! The extremal constructions, each checked against its formula.

use gallai::construct::{
    construct_f_lower, construct_gr_k3_extremal, construct_gr_k4e_extremal,
    construct_multiplicity_extremal, goodman_extremal_2coloring,
};
use gallai::formulas::{g_mixed, g_multiplicity_bounds, goodman_m2, gr_k3};
use gallai::{count_protected_edges, find_mono_subgraph, triangle_census, MonoKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("Gallai colorings without monochromatic triangles:");
    for k in 1..=5 {
        let c = construct_gr_k3_extremal(k)?;
        let t = triangle_census(&c);
        println!(
            "  k = {k}: {} vertices (GR = {}), mono {}, rainbow {}",
            c.n(),
            gr_k3(k as u64)?,
            t.mono_total(),
            t.rainbow
        );
    }

    println!("\nno K4+e in colors 1..=s, no triangle in the rest:");
    for (k, s) in [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 4)] {
        let c = construct_gr_k4e_extremal(k, s)?;
        let clean = (1..=k as u8).all(|color| {
            let kind = if color as usize <= s { MonoKind::K4PlusE } else { MonoKind::K3 };
            !find_mono_subgraph(&c, color, kind).found()
        });
        println!("  (k, s) = ({k}, {s}): {} vertices, g = {}, clean = {clean}", c.n(), g_mixed(k as u64, s as u64)?);
    }

    println!("\nfewest monochromatic triangles in Gallai colorings:");
    for (k, n) in [(3, 11), (3, 13), (3, 15), (4, 26), (4, 40)] {
        let c = construct_multiplicity_extremal(k, n)?;
        let b = g_multiplicity_bounds(k as u64, n as u64)?;
        println!(
            "  k = {k}, n = {n}: {} (bounds {}..={})",
            triangle_census(&c).mono_total(),
            b.lower,
            b.upper
        );
    }

    println!("\nTurán blow-ups and their protected edges:");
    for (n, k) in [(20, 2), (30, 3), (55, 4)] {
        let c = construct_f_lower(n, k)?;
        println!("  n = {n}, k = {k}: {} protected edges", count_protected_edges(&c));
    }

    let c = goodman_extremal_2coloring(20, 1, 2, 2)?;
    println!(
        "\nbalanced 2-coloring of K_20: {} monochromatic triangles (minimum {})",
        triangle_census(&c).mono_total(),
        goodman_m2(20)
    );
    Ok(())
}
