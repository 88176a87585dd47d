//! Gallai partitions: find one, coarsen it to the fewest parts, and show the
//! reduced coloring on one vertex per part.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gallai::construct::random::random_gallai;
use gallai::construct::{blow_up, construct_gr_k3_extremal, pentagon_coloring, BlowupSpec};
use gallai::{coarsen_to_min_parts, find_gallai_partition, verify_gallai_partition, Coloring};

fn show(name: &str, c: &Coloring) -> Result<(), Box<dyn std::error::Error>> {
    let p = find_gallai_partition(c)?;
    assert!(verify_gallai_partition(c, &p));
    let q = coarsen_to_min_parts(c, &p);
    println!(
        "{name}: {} vertices, {} parts with colors {:?}, coarsest {} parts with colors {:?}",
        c.n(),
        p.len(),
        p.between_colors,
        q.len(),
        q.between_colors
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    show("pentagon", &pentagon_coloring(1, 2, 2)?)?;
    show("four-color extremal", &construct_gr_k3_extremal(4)?)?;

    // a triangle in color 3 blown up by three pentagons
    let base = Coloring::monochromatic(3, 3, 3)?;
    let c = blow_up(&BlowupSpec::uniform(base, &pentagon_coloring(1, 2, 3)?))?;
    show("three pentagons joined in color 3", &c)?;
    let p = coarsen_to_min_parts(&c, &find_gallai_partition(&c)?);
    print!("reduced coloring:\n{}", p.reduced);

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for i in 0..3 {
        show(&format!("random Gallai #{i}"), &random_gallai(30, 4, &mut rng))?;
    }

    let rainbow = Coloring::from_pair_colors(3, 3, vec![1, 2, 3])?;
    if let Err(e) = find_gallai_partition(&rainbow) {
        println!("rainbow triangle: {e}");
    }
    Ok(())
}
