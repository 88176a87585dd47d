use super::{from_edge_list, ConstructError};
use crate::coloring::{Color, Coloring};

fn distinct(a: Color, b: Color) -> Result<(), ConstructError> {
    if a == b {
        Err(ConstructError::SameColors(a))
    } else {
        Ok(())
    }
}

/// `K_5` with the 5-cycle `i, i+1` in color `a` and the diagonals in color `b`.
pub fn pentagon_coloring(a: Color, b: Color, k: usize) -> Result<Coloring, ConstructError> {
    distinct(a, b)?;
    let c = Coloring::from_fn(5, k, |u, v| if v - u == 1 || v - u == 4 { a } else { b })?;
    Ok(c)
}

/// Quadratic-residue coloring of `K_17`: `{u, v}` gets `a` iff `u - v` is a
/// nonzero square mod 17. Neither color class contains a `K_4`.
pub fn paley17_coloring(a: Color, b: Color, k: usize) -> Result<Coloring, ConstructError> {
    distinct(a, b)?;
    let mut residue = [false; 17];
    for x in 1..17usize {
        residue[x * x % 17] = true;
    }
    let c = Coloring::from_fn(17, k, |u, v| if residue[v - u] { a } else { b })?;
    Ok(c)
}

/// Circulant-plus-matching graph with every degree in
/// `{⌊(n-1)/2⌋, ⌈(n-1)/2⌉}` and at most one vertex off the majority degree.
fn balanced_half_graph(n: usize) -> Vec<(usize, usize)> {
    let (max_offset, matching) = match n % 4 {
        1 => ((n - 1) / 4, None),
        3 => ((n - 3) / 4, Some((n - 1) / 2)),
        2 => ((n - 2) / 4, None),
        _ => (n.saturating_sub(4) / 4, Some(n / 2)),
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for d in 1..=max_offset {
            let v = (u + d) % n;
            edges.push((u.min(v), u.max(v)));
        }
    }
    if let Some(shift) = matching {
        // n even: antipodal perfect matching; n odd: all but the last vertex
        for u in 0..n / 2 {
            edges.push((u, u + shift));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// A 2-coloring of `K_n` with exactly the Goodman minimum of monochromatic
/// triangles.
///
/// The monochromatic triangle count of a 2-coloring is
/// `C(n,3) - ½ Σ_v d(v)(n-1-d(v))` with `d` the color-`a` degree, so any
/// color-`a` graph with degrees as equal as parity allows is extremal.
pub fn goodman_extremal_2coloring(
    n: usize,
    a: Color,
    b: Color,
    k: usize,
) -> Result<Coloring, ConstructError> {
    distinct(a, b)?;
    if n == 0 {
        return Err(ConstructError::Precondition("n >= 1".into()));
    }
    Ok(from_edge_list(n, k, &balanced_half_graph(n), a, b)?)
}
