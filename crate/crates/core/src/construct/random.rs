//! Seeded random colorings for property tests and the verification suite.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{blow_up, BlowupSpec};
use crate::coloring::{Color, Coloring};

/// Uniformly random `k`-coloring of `K_n`.
pub fn random_coloring<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Coloring {
    let colors = (0..n * n.saturating_sub(1) / 2)
        .map(|_| rng.gen_range(1..=k) as Color)
        .collect();
    Coloring::from_pair_colors(n, k, colors).expect("n >= 1 and 1 <= k")
}

/// Random Gallai-`k`-coloring of `K_n`: a random base on at most two colors,
/// blown up by recursively generated Gallai colorings.
pub fn random_gallai<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Coloring {
    assert!(n >= 1 && k >= 1);
    if n == 1 {
        return Coloring::monochromatic(1, k, 1).expect("valid shape");
    }
    let t = rng.gen_range(2..=n.min(6));
    let a = rng.gen_range(1..=k) as Color;
    let b = if k > 1 && rng.gen_bool(0.8) {
        let mut b = rng.gen_range(1..=k) as Color;
        while b == a {
            b = rng.gen_range(1..=k) as Color;
        }
        b
    } else {
        a
    };
    let base = Coloring::from_fn(t, k, |_, _| if rng.gen_bool(0.5) { a } else { b })
        .expect("valid shape");

    // split n into t positive sizes
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..t - 1].to_vec();
    cuts.sort_unstable();
    let mut sizes = Vec::with_capacity(t);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(n)) {
        sizes.push(c - prev);
        prev = c;
    }
    let inserts = sizes.into_iter().map(|m| random_gallai(m, k, rng)).collect();
    blow_up(&BlowupSpec { base, inserts }).expect("sizes and k agree")
}
