//! Closed-form values: Goodman minima, Gallai-Ramsey numbers, Turán counts
//! and the multiplicity bounds.

use gallai::formulas::{
    ex_star, g_multiplicity_bounds, goodman_m2, gr_k3, gr_mixed_k4e, gr_star_k3, m3_formula,
    turan_count,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("Goodman minimum of monochromatic triangles in 2-colorings of K_n:");
    for n in 3..=12 {
        print!(" {}", goodman_m2(n));
    }
    println!();

    let m3 = m3_formula(100);
    println!("three-color minimum at n = 100: {} ({})", m3.value, m3.validity);

    println!("\n k  GR_k(K3)  GR*_k(K3)  GR_k(k(K4+e))");
    for k in 1..=8u64 {
        let star = if k >= 2 { gr_star_k3(k)?.to_string() } else { "-".into() };
        println!("{k:>2}  {:>8}  {star:>9}  {:>13}", gr_k3(k)?, gr_mixed_k4e(k, k)?);
    }

    println!("\nTurán graph T_5(30) has {} edges", turan_count(30, 5)?);
    println!("a K_(1,4)-free graph on 40 vertices has at most {} edges", ex_star(40, 4)?);

    println!("\nmonochromatic triangles forced in Gallai 3-colorings:");
    for n in [11, 15, 30, 100] {
        let b = g_multiplicity_bounds(3, n)?;
        println!("  n = {n:>3}: between {} and {}", b.lower, b.upper);
    }
    Ok(())
}
