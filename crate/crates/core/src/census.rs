//! Triangle censuses and monochromatic-subgraph predicates.
//!
//! Everything here works on per-color adjacency bitsets: one row of `u64`
//! words per vertex per color. Common-neighborhood sizes are popcounts of
//! row intersections, which keeps the 300-vertex constructions cheap.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, Coloring};

/// Per-color adjacency bitsets of a [`Coloring`].
#[derive(Clone, Debug)]
pub struct ColorGraphs {
    n: usize,
    k: usize,
    words: usize,
    // rows[(color - 1) * n + v] spans `words` u64s in `bits`
    bits: Vec<u64>,
}

impl ColorGraphs {
    pub fn new(c: &Coloring) -> Self {
        let n = c.n();
        let k = c.k();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; k * n * words];
        for (u, v, col) in c.edges() {
            let base = (col as usize - 1) * n;
            bits[(base + u) * words + v / 64] |= 1 << (v % 64);
            bits[(base + v) * words + u / 64] |= 1 << (u % 64);
        }
        Self { n, k, words, bits }
    }

    #[inline]
    pub fn row(&self, color: Color, v: usize) -> &[u64] {
        let start = ((color as usize - 1) * self.n + v) * self.words;
        &self.bits[start..start + self.words]
    }

    #[inline]
    pub fn degree(&self, color: Color, v: usize) -> usize {
        popcount(self.row(color, v))
    }

    #[inline]
    pub fn has_edge(&self, color: Color, u: usize, v: usize) -> bool {
        self.row(color, u)[v / 64] >> (v % 64) & 1 == 1
    }

    /// `|N_color(u) ∩ N_color(v)|`.
    #[inline]
    pub fn common(&self, color: Color, u: usize, v: usize) -> usize {
        self.row(color, u)
            .iter()
            .zip(self.row(color, v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn colors(&self) -> impl Iterator<Item = Color> {
        1..=self.k as Color
    }
}

#[inline]
fn popcount(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

fn first_one(row: &[u64]) -> Option<usize> {
    row.iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + row[i].trailing_zeros() as usize)
}

fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}


/// Triangle counts by color pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleCensus {
    /// Monochromatic triangles of each color `1..=k`; index `c - 1`.
    pub mono_per_color: Vec<u64>,
    pub bichromatic: u64,
    pub rainbow: u64,
}

impl TriangleCensus {
    pub fn mono_total(&self) -> u64 {
        self.mono_per_color.iter().sum()
    }

    pub fn total(&self) -> u64 {
        self.mono_total() + self.bichromatic + self.rainbow
    }
}

pub fn triangle_census(c: &Coloring) -> TriangleCensus {
    census_with(c, &ColorGraphs::new(c))
}

fn census_with(c: &Coloring, g: &ColorGraphs) -> TriangleCensus {
    let n = c.n() as u64;
    // each mono triangle is seen once per edge
    let mut mono3 = vec![0u64; c.k()];
    for (u, v, col) in c.edges() {
        mono3[col as usize - 1] += g.common(col, u, v) as u64;
    }
    let mono_per_color: Vec<u64> = mono3.iter().map(|x| x / 3).collect();
    let mono: u64 = mono_per_color.iter().sum();

    // same-colored angles: mono triangles have 3, bichromatic 1, rainbow 0
    let mut angles = 0u64;
    for col in g.colors() {
        for v in 0..c.n() {
            let d = g.degree(col, v) as u64;
            angles += d * d.saturating_sub(1) / 2;
        }
    }
    let bichromatic = angles - 3 * mono;
    let all = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    TriangleCensus {
        mono_per_color,
        bichromatic,
        rainbow: all - mono - bichromatic,
    }
}

/// True when no triangle has three distinct colors.
pub fn is_gallai(c: &Coloring) -> bool {
    find_rainbow_triangle(c).is_none()
}

/// The lexicographically first rainbow triangle, if any.
pub fn find_rainbow_triangle(c: &Coloring) -> Option<[usize; 3]> {
    let n = c.n();
    for a in 0..n {
        for b in a + 1..n {
            let ab = c.color(a, b);
            for w in b + 1..n {
                let aw = c.color(a, w);
                let bw = c.color(b, w);
                if ab != aw && ab != bw && aw != bw {
                    return Some([a, b, w]);
                }
            }
        }
    }
    None
}

/// Target graphs for [`find_mono_subgraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonoKind {
    K3,
    K4,
    /// `K_4` plus one pendant edge.
    K4PlusE,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoSubgraphReport {
    pub color: Color,
    pub kind: MonoKind,
    /// Clique vertices, followed by the pendant vertex for `K4PlusE`.
    /// The pendant edge joins the first and the last vertex.
    pub witness: Option<Vec<usize>>,
}

impl MonoSubgraphReport {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

pub fn find_mono_subgraph(c: &Coloring, color: Color, kind: MonoKind) -> MonoSubgraphReport {
    let g = ColorGraphs::new(c);
    find_mono_subgraph_in(&g, color, kind)
}

/// Same as [`find_mono_subgraph`] on prebuilt adjacency.
pub fn find_mono_subgraph_in(g: &ColorGraphs, color: Color, kind: MonoKind) -> MonoSubgraphReport {
    assert!(
        color >= 1 && color as usize <= g.k,
        "color {color} outside 1..={}",
        g.k
    );
    let witness = match kind {
        MonoKind::K3 => find_k3(g, color),
        MonoKind::K4 => (0..g.n).find_map(|a| k4_through(g, color, a)),
        MonoKind::K4PlusE => find_k4_plus_e(g, color),
    };
    MonoSubgraphReport {
        color,
        kind,
        witness,
    }
}

fn find_k3(g: &ColorGraphs, color: Color) -> Option<Vec<usize>> {
    for u in 0..g.n {
        for v in ones(g.row(color, u)).filter(|&v| v > u) {
            let common = and(g.row(color, u), g.row(color, v));
            if let Some(w) = first_one(&common) {
                return Some(vec![u, v, w]);
            }
        }
    }
    None
}

/// A `color`-clique of size four containing `a`, with `a` listed first.
fn k4_through(g: &ColorGraphs, color: Color, a: usize) -> Option<Vec<usize>> {
    let na = g.row(color, a);
    for b in ones(na) {
        let x = and(na, g.row(color, b));
        for c in ones(&x) {
            let y = and(&x, g.row(color, c));
            if let Some(d) = first_one(&y) {
                return Some(vec![a, b, c, d]);
            }
        }
    }
    None
}

// A K_4+e exists iff some vertex of degree >= 4 lies in a K_4: its fourth
// neighbor outside the clique supplies the pendant edge.
fn find_k4_plus_e(g: &ColorGraphs, color: Color) -> Option<Vec<usize>> {
    for a in 0..g.n {
        if g.degree(color, a) < 4 {
            continue;
        }
        if let Some(mut clique) = k4_through(g, color, a) {
            let pendant = ones(g.row(color, a))
                .find(|x| !clique.contains(x))
                .expect("degree >= 4 leaves a neighbor outside the clique");
            clique.push(pendant);
            return Some(clique);
        }
    }
    None
}

/// Edges lying in neither a rainbow nor a monochromatic triangle.
pub fn count_protected_edges(c: &Coloring) -> u64 {
    let g = ColorGraphs::new(c);
    count_protected_with(c, &g)
}

fn count_protected_with(c: &Coloring, g: &ColorGraphs) -> u64 {
    let n = c.n();
    let mut protected = 0;
    for (u, v, q) in c.edges() {
        let same = g.common(q, u, v);
        if same > 0 {
            continue;
        }
        // third vertices w where neither uw nor vw has color q
        let avoid_q = (n - 2) - (g.degree(q, u) - 1) - (g.degree(q, v) - 1) + same;
        // of those, w with c(uw) = c(vw) close a bichromatic triangle
        let paired: usize = g
            .colors()
            .filter(|&p| p != q)
            .map(|p| g.common(p, u, v))
            .sum();
        if avoid_q == paired {
            protected += 1;
        }
    }
    protected
}

/// Edges `uv` of color `q` where both endpoints have `q`-degree below `h`,
/// i.e. edges in no monochromatic `K_{1,h}`.
pub fn count_nim_star_edges(c: &Coloring, h: usize) -> u64 {
    assert!(h >= 1, "star needs at least one leaf");
    let g = ColorGraphs::new(c);
    c.edges()
        .filter(|&(u, v, q)| g.degree(q, u) < h && g.degree(q, v) < h)
        .count() as u64
}

/// The JSON census report written by the `count` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusReport {
    pub schema: String,
    pub n: usize,
    pub k: usize,
    pub mono: BTreeMap<String, u64>,
    pub bichromatic: u64,
    pub rainbow: u64,
    pub protected_edges: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nim_star_edges: Option<NimStarCount>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NimStarCount {
    pub h: usize,
    pub edges: u64,
}

impl CensusReport {
    pub fn new(c: &Coloring, star_leaves: Option<usize>) -> Self {
        let g = ColorGraphs::new(c);
        let census = census_with(c, &g);
        Self {
            schema: "1".into(),
            n: c.n(),
            k: c.k(),
            mono: census
                .mono_per_color
                .iter()
                .enumerate()
                .map(|(i, &m)| ((i + 1).to_string(), m))
                .collect(),
            bichromatic: census.bichromatic,
            rainbow: census.rainbow,
            protected_edges: count_protected_with(c, &g),
            nim_star_edges: star_leaves.map(|h| NimStarCount {
                h,
                edges: count_nim_star_edges(c, h),
            }),
        }
    }
}
