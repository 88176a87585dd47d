//! Edge-disjoint packing of `k-1` copies of a maximum `K_{1,h}`-free graph.
//!
//! Each copy is placed by a random bijection. Overlapping edges are removed
//! one endpoint at a time: for an endpoint `u` of a shared edge in layer `i`,
//! pick `v` at distance at least three from `u` in the union graph and swap
//! `u` and `v` in layer `i`'s placement. Afterwards no layer-`i` edge at `u`
//! or `v` is shared, and layer-`i` edges elsewhere are untouched, so the
//! number of shared layer-`i` edges strictly drops.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ConstructError;
use crate::coloring::{pair_index, Color, Coloring};

/// Circulant graph on `n` vertices with maximum degree `h - 1` and
/// `⌊(h-1)n/2⌋` edges: offsets `1..=⌊(h-1)/2⌋`, plus a (near-)perfect
/// matching when `h - 1` is odd.
pub fn star_free_base_graph(n: usize, h: usize) -> Result<Vec<(usize, usize)>, ConstructError> {
    if h < 1 || n < h + 1 {
        return Err(ConstructError::Precondition(format!(
            "star-free base graph needs n >= h + 1 (got n = {n}, h = {h})"
        )));
    }
    let half = (h - 1) / 2;
    let mut edges = Vec::new();
    for u in 0..n {
        for d in 1..=half {
            let v = (u + d) % n;
            edges.push((u.min(v), u.max(v)));
        }
    }
    if (h - 1) % 2 == 1 {
        let shift = if n % 2 == 0 { n / 2 } else { (n - 1) / 2 };
        for u in 0..n / 2 {
            edges.push((u, u + shift));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(edges)
}

/// Result of [`construct_nim_star`]: the coloring and the repair work done.
#[derive(Clone, Debug)]
pub struct NimStar {
    pub coloring: Coloring,
    /// Layer `i` holds the edges colored `i + 1`.
    pub layers: Vec<Vec<(usize, usize)>>,
    pub switches: usize,
}

struct Packing {
    n: usize,
    base: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
    // placement[i][x] = vertex of K_n hosting base vertex x in layer i
    placement: Vec<Vec<usize>>,
    // mask of layers using each pair of K_n
    owners: Vec<u64>,
}

impl Packing {
    fn pair(&self, layer: usize, e: usize) -> usize {
        let (x, y) = self.base[e];
        let p = &self.placement[layer];
        pair_index(self.n, p[x], p[y])
    }

    fn place(&mut self, layer: usize, e: usize, on: bool) {
        let idx = self.pair(layer, e);
        if on {
            self.owners[idx] |= 1 << layer;
        } else {
            self.owners[idx] &= !(1 << layer);
        }
    }

    fn first_shared(&self) -> Option<(usize, usize)> {
        for layer in (0..self.placement.len()).rev() {
            for e in 0..self.base.len() {
                if self.owners[self.pair(layer, e)].count_ones() > 1 {
                    let (x, _) = self.base[e];
                    return Some((layer, self.placement[layer][x]));
                }
            }
        }
        None
    }

    fn union_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| w != u && self.owners[pair_index(self.n, u, w)] != 0)
    }

    fn far_vertices(&self, u: usize) -> Vec<usize> {
        let mut near = vec![false; self.n];
        near[u] = true;
        for w in self.union_neighbors(u) {
            near[w] = true;
            for z in self.union_neighbors(w) {
                near[z] = true;
            }
        }
        (0..self.n).filter(|&v| !near[v]).collect()
    }

    fn switch(&mut self, layer: usize, u: usize, v: usize) {
        let p = &self.placement[layer];
        let x = p.iter().position(|&w| w == u).expect("bijection");
        let y = p.iter().position(|&w| w == v).expect("bijection");
        let mut touched: Vec<usize> = self.incident[x]
            .iter()
            .chain(&self.incident[y])
            .copied()
            .collect();
        touched.sort_unstable();
        touched.dedup();
        for &e in &touched {
            self.place(layer, e, false);
        }
        self.placement[layer].swap(x, y);
        for &e in &touched {
            self.place(layer, e, true);
        }
    }
}

/// Colors `K_n` with `k-1` edge-disjoint copies of a maximum `K_{1,h}`-free
/// graph in colors `1..k` and everything else in color `k`. Every layer edge
/// avoids monochromatic `K_{1,h}`, so at least `(k-1)·⌊(h-1)n/2⌋` edges do.
///
/// Needs `n > ((k-1)(h-1))^2 + 1` so that a vertex at distance three always
/// exists in the union graph.
pub fn construct_nim_star(n: usize, h: usize, k: usize, seed: u64) -> Result<NimStar, ConstructError> {
    if h < 2 || k < 2 || k > 64 {
        return Err(ConstructError::Precondition(format!(
            "need h >= 2 and 2 <= k <= 64 (got h = {h}, k = {k})"
        )));
    }
    let delta = (k - 1) * (h - 1);
    if n <= delta * delta + 1 {
        return Err(ConstructError::Precondition(format!(
            "need n > ((k-1)(h-1))^2 + 1 = {} (got n = {n})",
            delta * delta + 1
        )));
    }
    let base = star_free_base_graph(n, h)?;
    let mut incident = vec![Vec::new(); n];
    for (e, &(x, y)) in base.iter().enumerate() {
        incident[x].push(e);
        incident[y].push(e);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let placement = (0..k - 1)
        .map(|_| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            p
        })
        .collect();
    let mut pack = Packing {
        n,
        base,
        incident,
        placement,
        owners: vec![0; n * (n - 1) / 2],
    };
    for layer in 0..k - 1 {
        for e in 0..pack.base.len() {
            pack.place(layer, e, true);
        }
    }

    let limit = n * n;
    let mut switches = 0;
    while let Some((layer, u)) = pack.first_shared() {
        if switches == limit {
            return Err(ConstructError::RepairStalled(limit));
        }
        let far = pack.far_vertices(u);
        let v = *far
            .choose(&mut rng)
            .ok_or(ConstructError::RepairStalled(switches))?;
        pack.switch(layer, u, v);
        switches += 1;
    }

    let layers: Vec<Vec<(usize, usize)>> = (0..k - 1)
        .map(|layer| {
            let p = &pack.placement[layer];
            let mut es: Vec<(usize, usize)> = pack
                .base
                .iter()
                .map(|&(x, y)| (p[x].min(p[y]), p[x].max(p[y])))
                .collect();
            es.sort_unstable();
            es
        })
        .collect();
    let mut colors = vec![k as Color; n * (n - 1) / 2];
    for (i, es) in layers.iter().enumerate() {
        for &(u, v) in es {
            colors[pair_index(n, u, v)] = (i + 1) as Color;
        }
    }
    Ok(NimStar {
        coloring: Coloring::from_pair_colors(n, k, colors)?,
        layers,
        switches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::count_nim_star_edges;
    use crate::formulas::ex_star;
    use num_bigint::BigUint;

    #[test]
    fn base_graph_is_extremal() {
        for n in 3..40 {
            for h in 1..n.min(9) {
                let es = star_free_base_graph(n, h).unwrap();
                assert_eq!(BigUint::from(es.len()), ex_star(n as u64, h as u64).unwrap());
                let mut deg = vec![0; n];
                for &(u, v) in &es {
                    assert!(u < v && v < n);
                    deg[u] += 1;
                    deg[v] += 1;
                }
                assert!(deg.iter().all(|&d| d < h), "n = {n}, h = {h}");
            }
        }
    }

    #[test]
    fn layers_are_disjoint_and_sized() {
        let r = construct_nim_star(20, 3, 3, 0).unwrap();
        assert_eq!(r.layers.len(), 2);
        let mut all: Vec<_> = r.layers.concat();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), total);
        assert!(count_nim_star_edges(&r.coloring, 3) >= 40);
    }

    #[test]
    fn single_layer_is_exact() {
        let r = construct_nim_star(30, 4, 2, 7).unwrap();
        assert_eq!(r.switches, 0);
        assert_eq!(count_nim_star_edges(&r.coloring, 4), 45);
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = construct_nim_star(40, 3, 4, 11).unwrap();
        let b = construct_nim_star(40, 3, 4, 11).unwrap();
        assert_eq!(a.coloring, b.coloring);
    }

    #[test]
    fn rejects_small_n() {
        assert!(construct_nim_star(17, 3, 3, 0).is_err());
        assert!(construct_nim_star(18, 3, 3, 0).is_ok());
    }
}
