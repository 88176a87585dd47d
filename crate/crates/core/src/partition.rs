//! Gallai partitions: a vertex partition with a single color between any two
//! parts and at most two colors between parts overall.
//!
//! The search runs over candidate between-color sets `S` (`|S| <= 2`, in
//! lexicographic order). For a fixed `S` the components of the graph of
//! non-`S` edges are forced to sit inside parts, and any two parts joined by
//! two colors must merge. The merge fixpoint refines every Gallai partition
//! whose between-colors lie in `S`, so it has at least two parts whenever
//! one exists.

use serde::Serialize;
use thiserror::Error;

use crate::census::find_rainbow_triangle;
use crate::coloring::{Color, Coloring};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("coloring has a rainbow triangle on vertices {0:?} (1-based {one_based:?})", one_based = .0.map(|v| v + 1))]
    NotGallai([usize; 3]),
    #[error("a Gallai partition needs at least two vertices")]
    TooSmall,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiPartition {
    /// Sorted vertex lists, ordered by smallest member.
    pub parts: Vec<Vec<usize>>,
    /// Colors used between parts, ascending.
    pub between_colors: Vec<Color>,
    /// One vertex per part; pair `{i, j}` carries the color between parts `i` and `j`.
    #[serde(skip)]
    pub reduced: Coloring,
}

impl GallaiPartition {
    /// Builds the partition record from a part label per vertex. Returns
    /// `None` when some pair of parts is not monochromatic.
    pub fn from_labels(c: &Coloring, labels: &[usize]) -> Option<Self> {
        let parts = parts_from_labels(labels);
        let t = parts.len();
        let mut part_of = vec![0; c.n()];
        for (i, p) in parts.iter().enumerate() {
            for &v in p {
                part_of[v] = i;
            }
        }
        let mut between = vec![0 as Color; t * t];
        for (u, v, col) in c.edges() {
            let (a, b) = (part_of[u], part_of[v]);
            if a == b {
                continue;
            }
            let slot = &mut between[a * t + b];
            if *slot == 0 {
                *slot = col;
                between[b * t + a] = col;
            } else if *slot != col {
                return None;
            }
        }
        let reduced = Coloring::from_fn(t, c.k(), |i, j| between[i * t + j]).ok()?;
        let between_colors = if t >= 2 { reduced.used_colors() } else { vec![] };
        Some(Self {
            parts,
            between_colors,
            reduced,
        })
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

fn parts_from_labels(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut slot = std::collections::HashMap::new();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for (v, &l) in labels.iter().enumerate() {
        let i = *slot.entry(l).or_insert_with(|| {
            parts.push(Vec::new());
            parts.len() - 1
        });
        parts[i].push(v);
    }
    parts
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn labels(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|x| self.find(x)).collect()
    }
}

/// The merge fixpoint for between-color set `allowed`: a part label per vertex.
///
/// Pairs of parts that see two colors are merged until every pair of parts is
/// monochromatic. The result may be a single part.
pub fn merge_fixpoint(c: &Coloring, allowed: &[Color]) -> Vec<usize> {
    let n = c.n();
    let mut uf = UnionFind::new(n);
    for (u, v, col) in c.edges() {
        if !allowed.contains(&col) {
            uf.union(u, v);
        }
    }
    loop {
        let labels = uf.labels();
        let roots: Vec<usize> = (0..n).filter(|&v| labels[v] == v).collect();
        if roots.len() < 2 {
            return labels;
        }
        let mut index = vec![usize::MAX; n];
        for (i, &r) in roots.iter().enumerate() {
            index[r] = i;
        }
        let t = roots.len();
        let mut seen = vec![0 as Color; t * t];
        let mut merges = Vec::new();
        for (u, v, col) in c.edges() {
            let (a, b) = (index[labels[u]], index[labels[v]]);
            if a == b {
                continue;
            }
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            let slot = &mut seen[a * t + b];
            if *slot == 0 {
                *slot = col;
            } else if *slot != col && *slot != Color::MAX {
                *slot = Color::MAX;
                merges.push((roots[a], roots[b]));
            }
        }
        if merges.is_empty() {
            return labels;
        }
        for (a, b) in merges {
            uf.union(a, b);
        }
    }
}

/// Candidate between-color sets: singletons then pairs, lexicographic.
fn candidate_sets(k: usize) -> impl Iterator<Item = Vec<Color>> {
    let k = k as Color;
    (1..=k)
        .map(|a| vec![a])
        .chain((1..=k).flat_map(move |a| (a + 1..=k).map(move |b| vec![a, b])))
}

pub fn find_gallai_partition(c: &Coloring) -> Result<GallaiPartition, PartitionError> {
    if c.n() < 2 {
        return Err(PartitionError::TooSmall);
    }
    if let Some(t) = find_rainbow_triangle(c) {
        return Err(PartitionError::NotGallai(t));
    }
    for allowed in candidate_sets(c.k()) {
        let labels = merge_fixpoint(c, &allowed);
        let first = labels[0];
        if labels.iter().any(|&l| l != first) {
            return Ok(GallaiPartition::from_labels(c, &labels)
                .expect("merge fixpoint has monochromatic part pairs"));
        }
    }
    unreachable!("every Gallai coloring on at least two vertices has a Gallai partition")
}

/// True iff `p` is a Gallai partition of `c`.
pub fn verify_gallai_partition(c: &Coloring, p: &GallaiPartition) -> bool {
    let n = c.n();
    if p.parts.len() < 2 || p.reduced.n() != p.parts.len() {
        return false;
    }
    let mut part_of = vec![usize::MAX; n];
    for (i, part) in p.parts.iter().enumerate() {
        if part.is_empty() {
            return false;
        }
        for &v in part {
            if v >= n || part_of[v] != usize::MAX {
                return false;
            }
            part_of[v] = i;
        }
    }
    if part_of.contains(&usize::MAX) {
        return false;
    }
    for (u, v, col) in c.edges() {
        let (a, b) = (part_of[u], part_of[v]);
        if a != b && p.reduced.color(a, b) != col {
            return false;
        }
    }
    let used = p.reduced.used_colors();
    used.len() <= 2 && used.iter().all(|x| p.between_colors.contains(x))
        && p.between_colors.len() <= 2
}

/// Coarsens `p` to the fewest parts among its valid coarsenings.
///
/// A two-part coarsening exists iff, for some between-color `x`, the reduced
/// graph of non-`x` pairs is disconnected. Otherwise the valid coarsenings
/// are the partitions into modules of the reduced coloring, and the coarsest
/// one consists of its maximal proper modules.
pub fn coarsen_to_min_parts(c: &Coloring, p: &GallaiPartition) -> GallaiPartition {
    let r = &p.reduced;
    let t = r.n();
    if t <= 2 {
        return p.clone();
    }
    let blocks = two_block_cut(r).unwrap_or_else(|| maximal_modules(r));
    let mut labels = vec![0; c.n()];
    for (i, part) in p.parts.iter().enumerate() {
        for &v in part {
            labels[v] = blocks[i];
        }
    }
    GallaiPartition::from_labels(c, &labels).expect("coarsening by modules stays valid")
}

fn two_block_cut(r: &Coloring) -> Option<Vec<usize>> {
    let t = r.n();
    for x in r.used_colors() {
        let mut uf = UnionFind::new(t);
        for (i, j, col) in r.edges() {
            if col != x {
                uf.union(i, j);
            }
        }
        let labels = uf.labels();
        if labels.iter().any(|&l| l != labels[0]) {
            // component of part 0 against everything else
            return Some(labels.iter().map(|&l| usize::from(l != labels[0])).collect());
        }
    }
    None
}

/// Smallest module of `r` containing `seed`.
fn module_closure(r: &Coloring, seed: &[usize]) -> Vec<bool> {
    let t = r.n();
    let mut inside = vec![false; t];
    let mut members: Vec<usize> = seed.to_vec();
    for &s in seed {
        inside[s] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for z in 0..t {
            if inside[z] {
                continue;
            }
            let first = r.color(z, members[0]);
            if members.iter().any(|&m| r.color(z, m) != first) {
                inside[z] = true;
                members.push(z);
                changed = true;
            }
        }
    }
    inside
}

// Both color graphs connected: maximal proper modules are disjoint, and
// v belongs to u's iff the closure of {u, v} is proper.
fn maximal_modules(r: &Coloring) -> Vec<usize> {
    let t = r.n();
    let mut block = vec![usize::MAX; t];
    let mut next = 0;
    for u in 0..t {
        if block[u] != usize::MAX {
            continue;
        }
        block[u] = next;
        for v in u + 1..t {
            if block[v] == usize::MAX {
                let closure = module_closure(r, &[u, v]);
                if closure.iter().any(|&x| !x) {
                    block[v] = next;
                }
            }
        }
        next += 1;
    }
    block
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{blow_up, pentagon_coloring, BlowupSpec};

    #[test]
    fn edge_gives_two_singletons() {
        let c = Coloring::monochromatic(2, 3, 2).unwrap();
        let p = find_gallai_partition(&c).unwrap();
        assert_eq!(p.parts, vec![vec![0], vec![1]]);
        assert_eq!(p.between_colors, vec![2]);
        assert!(verify_gallai_partition(&c, &p));
    }

    #[test]
    fn pentagon_splits_into_singletons() {
        let c = pentagon_coloring(1, 2, 2).unwrap();
        let p = find_gallai_partition(&c).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.between_colors, vec![1, 2]);
        assert!(verify_gallai_partition(&c, &p));
        // no coarsening merges anything
        assert_eq!(coarsen_to_min_parts(&c, &p).len(), 5);
    }

    #[test]
    fn pentagon_of_pentagons_splits_into_copies() {
        let outer = pentagon_coloring(3, 4, 4).unwrap();
        let inner = pentagon_coloring(1, 2, 4).unwrap();
        let c = blow_up(&BlowupSpec {
            base: outer,
            inserts: vec![inner; 5],
        })
        .unwrap();
        let p = find_gallai_partition(&c).unwrap();
        let expected: Vec<Vec<usize>> = (0..5).map(|i| (5 * i..5 * i + 5).collect()).collect();
        assert_eq!(p.parts, expected);
        assert_eq!(p.between_colors, vec![3, 4]);
        assert!(verify_gallai_partition(&c, &p));
    }

    #[test]
    fn monochromatic_clique_gives_singletons() {
        let c = Coloring::monochromatic(6, 2, 1).unwrap();
        let p = find_gallai_partition(&c).unwrap();
        assert_eq!(p.len(), 6);
        assert!(verify_gallai_partition(&c, &p));
        assert_eq!(coarsen_to_min_parts(&c, &p).len(), 2);
    }

    #[test]
    fn rainbow_triangle_rejected() {
        let c: Coloring = "3 3\n1 2 1\n1 3 2\n2 3 3".parse().unwrap();
        assert_eq!(
            find_gallai_partition(&c),
            Err(PartitionError::NotGallai([0, 1, 2]))
        );
        let bogus = GallaiPartition {
            parts: vec![vec![0], vec![1], vec![2]],
            between_colors: vec![1, 2, 3],
            reduced: c.clone(),
        };
        assert!(!verify_gallai_partition(&c, &bogus));
        let one = Coloring::monochromatic(1, 1, 1).unwrap();
        assert_eq!(find_gallai_partition(&one), Err(PartitionError::TooSmall));
    }

    #[test]
    fn verify_rejects_malformed_partitions() {
        let c = pentagon_coloring(1, 2, 2).unwrap();
        let good = find_gallai_partition(&c).unwrap();
        let mut missing = good.clone();
        missing.parts[4].clear();
        assert!(!verify_gallai_partition(&c, &missing));
        let mut overlap = good.clone();
        overlap.parts[0].push(1);
        assert!(!verify_gallai_partition(&c, &overlap));
        // merging two pentagon vertices breaks monochromatic part pairs
        let merged = GallaiPartition::from_labels(&c, &[0, 0, 2, 3, 4]);
        assert!(merged.is_none());
    }

    #[test]
    fn three_parts_with_repeated_color_coarsen_to_two() {
        // parts {0,1}, {2}, {3}: c(V1,V2) = c(V1,V3) = 1, c(V2,V3) = 2
        let c = Coloring::from_fn(4, 2, |u, v| match (u, v) {
            (0, 1) => 2,
            (2, 3) => 2,
            _ => 1,
        })
        .unwrap();
        let p = GallaiPartition::from_labels(&c, &[0, 0, 2, 3]).unwrap();
        assert_eq!(p.len(), 3);
        assert!(verify_gallai_partition(&c, &p));
        let q = coarsen_to_min_parts(&c, &p);
        assert_eq!(q.parts, vec![vec![0, 1], vec![2, 3]]);
        assert!(verify_gallai_partition(&c, &q));
    }

    #[test]
    fn two_parts_stay_put() {
        let c = Coloring::from_fn(4, 2, |u, v| if u < 2 && v >= 2 { 1 } else { 2 }).unwrap();
        let p = GallaiPartition::from_labels(&c, &[0, 0, 1, 1]).unwrap();
        assert_eq!(coarsen_to_min_parts(&c, &p), p);
    }
}
