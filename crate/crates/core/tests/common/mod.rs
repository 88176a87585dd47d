//! Naive reference implementations: triple loops over an adjacency matrix,
//! nothing shared with the library's bitset code.

#![allow(dead_code)]

use gallai::{Color, Coloring};

pub struct NaiveCensus {
    pub mono_per_color: Vec<u64>,
    pub bichromatic: u64,
    pub rainbow: u64,
}

impl NaiveCensus {
    pub fn mono(&self) -> u64 {
        self.mono_per_color.iter().sum()
    }
}

pub fn matrix(c: &Coloring) -> Vec<Vec<Color>> {
    let n = c.n();
    let mut m = vec![vec![0; n]; n];
    for (u, v, col) in c.edges() {
        m[u][v] = col;
        m[v][u] = col;
    }
    m
}

pub fn census(c: &Coloring) -> NaiveCensus {
    let m = matrix(c);
    let n = c.n();
    let mut out = NaiveCensus {
        mono_per_color: vec![0; c.k()],
        bichromatic: 0,
        rainbow: 0,
    };
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                let (x, y, z) = (m[a][b], m[a][d], m[b][d]);
                if x == y && y == z {
                    out.mono_per_color[x as usize - 1] += 1;
                } else if x != y && y != z && x != z {
                    out.rainbow += 1;
                } else {
                    out.bichromatic += 1;
                }
            }
        }
    }
    out
}

/// Edges with no third vertex closing a monochromatic or rainbow triangle.
pub fn protected_edges(c: &Coloring) -> u64 {
    let m = matrix(c);
    let n = c.n();
    let mut count = 0;
    for u in 0..n {
        for v in u + 1..n {
            let q = m[u][v];
            let ok = (0..n).filter(|&w| w != u && w != v).all(|w| {
                let (a, b) = (m[u][w], m[v][w]);
                let mono = a == q && b == q;
                let rainbow = a != q && b != q && a != b;
                !mono && !rainbow
            });
            count += ok as u64;
        }
    }
    count
}

/// Edges whose endpoints both have fewer than `h` neighbors in the edge's color.
pub fn nim_star_edges(c: &Coloring, h: usize) -> u64 {
    let m = matrix(c);
    let n = c.n();
    let deg = |v: usize, q: Color| (0..n).filter(|&w| w != v && m[v][w] == q).count();
    let mut count = 0;
    for u in 0..n {
        for v in u + 1..n {
            let q = m[u][v];
            count += (deg(u, q) < h && deg(v, q) < h) as u64;
        }
    }
    count
}

pub fn has_mono_triangle(c: &Coloring, color: Color) -> bool {
    let m = matrix(c);
    let n = c.n();
    (0..n).any(|a| {
        (a + 1..n).filter(|&b| m[a][b] == color).any(|b| {
            (b + 1..n).any(|d| m[a][d] == color && m[b][d] == color)
        })
    })
}

fn has_k4_within(m: &[Vec<Color>], color: Color, vs: &[usize]) -> bool {
    for (i, &a) in vs.iter().enumerate() {
        let na: Vec<usize> = vs[i + 1..].iter().copied().filter(|&b| m[a][b] == color).collect();
        for (j, &b) in na.iter().enumerate() {
            let nab: Vec<usize> = na[j + 1..].iter().copied().filter(|&x| m[b][x] == color).collect();
            for (l, &x) in nab.iter().enumerate() {
                if nab[l + 1..].iter().any(|&y| m[x][y] == color) {
                    return true;
                }
            }
        }
    }
    false
}

/// A graph contains `K_4+e` iff some connected component contains a `K_4`
/// and has more than four vertices.
pub fn has_mono_k4_plus_e(c: &Coloring, color: Color) -> bool {
    let m = matrix(c);
    let n = c.n();
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for w in 0..n {
                if w != v && !seen[w] && m[v][w] == color {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        if comp.len() > 4 && has_k4_within(&m, color, &comp) {
            return true;
        }
    }
    false
}

pub fn has_mono_k4(c: &Coloring, color: Color) -> bool {
    let m = matrix(c);
    let all: Vec<usize> = (0..c.n()).collect();
    has_k4_within(&m, color, &all)
}

/// Every `k`-coloring of `K_n`, in lexicographic order of pair colors.
pub fn all_colorings(n: usize, k: usize) -> impl Iterator<Item = Coloring> {
    let m = n * (n - 1) / 2;
    let total = (k as u64).pow(m as u32);
    (0..total).map(move |code| {
        let mut colors = vec![1 as Color; m];
        let mut x = code;
        for slot in colors.iter_mut().rev() {
            *slot = (x % k as u64) as Color + 1;
            x /= k as u64;
        }
        Coloring::from_pair_colors(n, k, colors).unwrap()
    })
}

/// All set partitions of `0..n` as a block label per element.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut labels = vec![0; n];
    fn go(i: usize, blocks: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == labels.len() {
            out.push(labels.clone());
            return;
        }
        for b in 0..=blocks {
            labels[i] = b;
            go(i + 1, blocks.max(b + 1), labels, out);
        }
    }
    if n > 0 {
        go(1, 1, &mut labels, &mut out);
    }
    out
}

/// Colors between blocks, if every pair of blocks is monochromatic.
pub fn between_colors(c: &Coloring, labels: &[usize]) -> Option<Vec<Color>> {
    let t = labels.iter().max().map_or(0, |&x| x + 1);
    let mut seen = vec![vec![0 as Color; t]; t];
    let mut used = Vec::new();
    for (u, v, col) in c.edges() {
        let (a, b) = (labels[u], labels[v]);
        if a == b {
            continue;
        }
        let slot = &mut seen[a.min(b)][a.max(b)];
        if *slot == 0 {
            *slot = col;
            if !used.contains(&col) {
                used.push(col);
            }
        } else if *slot != col {
            return None;
        }
    }
    used.sort_unstable();
    Some(used)
}
