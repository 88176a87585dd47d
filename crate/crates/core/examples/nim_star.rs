//! Packing copies of a maximum K_(1,h)-free graph into one color each, and
//! counting the edges that avoid monochromatic stars.

use gallai::construct::construct_nim_star;
use gallai::count_nim_star_edges;
use gallai::formulas::ex_star;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, h, k) in [(20, 3, 2), (20, 3, 3), (40, 3, 4), (40, 4, 3), (70, 3, 5)] {
        let r = construct_nim_star(n, h, k, 0)?;
        let got = count_nim_star_edges(&r.coloring, h);
        let ex = ex_star(n as u64, h as u64)?;
        println!(
            "n = {n}, h = {h}, k = {k}: {got} star-free edges, (k-1)·ex = {}, {} switches",
            ex * (k as u64 - 1),
            r.switches
        );
    }
    match construct_nim_star(10, 3, 3, 0) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("too small: {e}"),
    }
    Ok(())
}
