use super::{
    blow_up, goodman_extremal_2coloring, join_two_copies, paley17_coloring, pentagon_coloring,
    BlowupSpec, ConstructError,
};
use crate::coloring::{Color, Coloring};
use crate::formulas::{gr_k3, multiplicity_split, to_usize};

fn precondition(msg: impl Into<String>) -> ConstructError {
    ConstructError::Precondition(msg.into())
}

/// Iterated pentagon blow-up on `5^pairs` vertices using colors `1..=2·pairs`,
/// with no monochromatic triangle. Declares `k` colors.
pub fn triangle_free_base(pairs: usize, k: usize) -> Result<Coloring, ConstructError> {
    let mut g = Coloring::monochromatic(1, k, 1)?;
    for i in 0..pairs {
        let a = (2 * i + 1) as Color;
        let gadget = pentagon_coloring(a, a + 1, k)?;
        g = blow_up(&BlowupSpec::uniform(gadget, &g))?;
    }
    Ok(g)
}

/// Gallai-`k`-coloring on `GR_k(K_3) - 1` vertices without monochromatic
/// triangles. Odd `k` finishes by joining two copies in color `k`.
pub fn construct_gr_k3_extremal(k: usize) -> Result<Coloring, ConstructError> {
    if k == 0 {
        return Err(precondition("k >= 1"));
    }
    let g = triangle_free_base(k / 2, k)?;
    if k % 2 == 1 {
        join_two_copies(&g, k as Color)
    } else {
        Ok(g)
    }
}

/// Gallai-`k`-coloring on `g(k, s)` vertices with no monochromatic `K_4+e`
/// in colors `1..=s` and no monochromatic triangle in colors `s+1..=k`.
///
/// Starts from a point (`s` even) or a color-1 `K_4` (`s` odd), then blows up
/// by Paley-17 gadgets while two `K_4+e` colors remain, by pentagons while
/// two triangle colors remain, and joins two copies in color `k` if one
/// color is left over.
pub fn construct_gr_k4e_extremal(k: usize, s: usize) -> Result<Coloring, ConstructError> {
    if k == 0 || s > k {
        return Err(precondition("k >= 1 and 0 <= s <= k"));
    }
    let (mut g, mut i) = if s % 2 == 0 {
        (Coloring::monochromatic(1, k, 1)?, 0)
    } else {
        (Coloring::monochromatic(4, k, 1)?, 1)
    };
    while i < k {
        let (a, b) = ((i + 1) as Color, (i + 2) as Color);
        if i + 2 <= s {
            g = blow_up(&BlowupSpec::uniform(paley17_coloring(a, b, k)?, &g))?;
            i += 2;
        } else if i + 2 <= k {
            g = blow_up(&BlowupSpec::uniform(pentagon_coloring(a, b, k)?, &g))?;
            i += 2;
        } else {
            g = join_two_copies(&g, k as Color)?;
            i += 1;
        }
    }
    Ok(g)
}

/// Gallai-`k`-coloring of `K_n` whose monochromatic triangle count meets the
/// upper multiplicity bound.
///
/// With `n = 5^{⌊(k-1)/2⌋}·m + r`: for odd `k` the triangle-free
/// `(k-1)`-color base gets `r` color-`k` cliques of order `m+1` and the rest
/// of order `m`; for even `k` the `(k-2)`-color base gets Goodman-extremal
/// 2-colorings in colors `k-1, k` of orders `m+1` and `m`.
pub fn construct_multiplicity_extremal(k: usize, n: usize) -> Result<Coloring, ConstructError> {
    let gr = to_usize(&gr_k3(k as u64)?).unwrap_or(usize::MAX);
    if n < gr {
        return Err(precondition(format!("n >= GR_k(K_3) = {gr}")));
    }
    let (_, m, r) = multiplicity_split(k as u64, n as u64).expect("base size fits");
    let (m, r) = (m as usize, r as usize);
    let kc = k as Color;
    let base = triangle_free_base((k - 1) / 2, k)?;
    let (big, small) = if k % 2 == 1 {
        (
            Coloring::monochromatic(m + 1, k, kc)?,
            Coloring::monochromatic(m, k, kc)?,
        )
    } else {
        (
            goodman_extremal_2coloring(m + 1, kc - 1, kc, k)?,
            goodman_extremal_2coloring(m, kc - 1, kc, k)?,
        )
    };
    blow_up(&BlowupSpec::two_kinds(base, r, &big, &small))
}

/// Partition of `0..n` into `r` classes, vertex `v` in class `v mod r`.
pub fn turan_parts(n: usize, r: usize) -> Result<Vec<Vec<usize>>, ConstructError> {
    if r == 0 || r > n {
        return Err(precondition(format!("1 <= r <= n (got n = {n}, r = {r})")));
    }
    let mut parts = vec![Vec::with_capacity(n / r + 1); r];
    for v in 0..n {
        parts[v % r].push(v);
    }
    Ok(parts)
}

/// Turán-graph blow-up of the triangle-free `(k-1)`-color extremal coloring,
/// with color `k` inside the classes. Every cross-class edge lies in neither
/// a rainbow nor a monochromatic triangle.
pub fn construct_f_lower(n: usize, k: usize) -> Result<Coloring, ConstructError> {
    if k < 2 {
        return Err(precondition("k >= 2"));
    }
    let base = construct_gr_k3_extremal(k - 1)?;
    let classes = base.n();
    if n < classes {
        return Err(precondition(format!(
            "n >= GR_(k-1)(K_3) - 1 = {classes} so every class is nonempty"
        )));
    }
    let kc = k as Color;
    let c = Coloring::from_fn(n, k, |u, v| {
        let (a, b) = (u % classes, v % classes);
        if a == b {
            kc
        } else {
            base.color(a, b)
        }
    })?;
    Ok(c)
}
