//! Exhaustive branch-and-prune search over edge colorings of `K_n`.
//!
//! Pairs are assigned in lexicographic order, so vertex 0's edges come first
//! and a triangle `{w, u, v}` with `w < u < v` is complete exactly when
//! `{u, v}` is assigned. Two symmetry reductions apply: vertex 0's edges get
//! nondecreasing colors, and among interchangeable colors a color may appear
//! only once the one before it has. The lexicographically smallest coloring
//! of every orbit satisfies both, so no optimum is lost.
//!
//! The first levels of the tree are expanded into prefixes that are searched
//! in parallel. Every prefix keeps its own incumbent and only prunes against
//! the shared one strictly, so the reported witness is the lexicographically
//! smallest optimal coloring whatever the thread count.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{pair_index, Color, Coloring, MAX_COLORS};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Largest `n` the search accepts; adjacency rows are single `u64` words.
pub const MAX_SEARCH_N: usize = 64;

const PREFIX_TARGET: usize = 512;
const FLUSH_EVERY: u64 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    MinMonoTriangles,
    Avoid,
    MaxProtectedEdges,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::MinMonoTriangles => "min-mono-triangles",
            Objective::Avoid => "avoid",
            Objective::MaxProtectedEdges => "max-protected-edges",
        })
    }
}

/// Monochromatic subgraph forbidden in one color by [`exists_avoiding`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    /// No restriction on the color.
    Free,
    K3,
    K4PlusE,
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "free" | "none" | "-" => Ok(Target::Free),
            "k3" => Ok(Target::K3),
            "k4e" | "k4+e" => Ok(Target::K4PlusE),
            other => Err(format!("unknown target `{other}` (expected k3, k4e or free)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Node limit; the search stops with `exhaustive = false` beyond it.
    pub budget: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Apply the symmetry reductions. Turning them off is only useful for
    /// checking that they are sound.
    pub symmetry: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            jobs: None,
            symmetry: true,
        }
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("search needs 1 <= n <= {MAX_SEARCH_N} (got {0})")]
    TooLarge(usize),
    #[error("search needs 1 <= k <= {MAX_COLORS} (got {0})")]
    BadColorCount(usize),
    #[error("expected one target per color ({expected}), got {got}")]
    TargetCount { expected: usize, got: usize },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchOutcome {
    pub objective: Objective,
    /// Optimum of the objective; for [`Objective::Avoid`], 1 if an avoiding
    /// coloring exists and 0 otherwise.
    pub value: u64,
    #[serde(skip)]
    pub witness: Option<Coloring>,
    pub nodes_explored: u64,
    /// False when the node budget ran out before the answer was settled.
    pub exhaustive: bool,
}

/// Minimum number of monochromatic triangles over all `k`-colorings of
/// `K_n`, or over Gallai colorings only.
pub fn min_mono_triangles(
    n: usize,
    k: usize,
    gallai_only: bool,
    opts: &SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    let p = Problem::new(n, k, Objective::MinMonoTriangles, gallai_only, vec![Target::Free; k], None, opts)?;
    p.solve(opts)
}

/// Whether some coloring avoids `targets[c - 1]` in every color `c`.
pub fn exists_avoiding(
    n: usize,
    k: usize,
    targets: &[Target],
    gallai_only: bool,
    opts: &SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    avoiding_with_color_limit(n, k, targets, gallai_only, None, opts)
}

/// Like [`exists_avoiding`], additionally requiring every vertex to see at
/// most `max_incident` distinct colors.
pub(crate) fn avoiding_with_color_limit(
    n: usize,
    k: usize,
    targets: &[Target],
    gallai_only: bool,
    max_incident: Option<usize>,
    opts: &SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    if targets.len() != k {
        return Err(SearchError::TargetCount {
            expected: k,
            got: targets.len(),
        });
    }
    let p = Problem::new(n, k, Objective::Avoid, gallai_only, targets.to_vec(), max_incident, opts)?;
    p.solve(opts)
}

/// Maximum number of edges in neither a rainbow nor a monochromatic triangle.
pub fn max_protected_edges(n: usize, k: usize, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    let p = Problem::new(n, k, Objective::MaxProtectedEdges, false, vec![Target::Free; k], None, opts)?;
    p.solve(opts)
}

struct Problem {
    n: usize,
    k: usize,
    objective: Objective,
    gallai: bool,
    targets: Vec<Target>,
    max_incident: Option<usize>,
    symmetry: bool,
    // follows[c]: color c may appear only after color c - 1 has
    follows: Vec<bool>,
    edges: Vec<(usize, usize)>,
}

impl Problem {
    fn new(
        n: usize,
        k: usize,
        objective: Objective,
        gallai: bool,
        targets: Vec<Target>,
        max_incident: Option<usize>,
        opts: &SearchOptions,
    ) -> Result<Self, SearchError> {
        if n == 0 || n > MAX_SEARCH_N {
            return Err(SearchError::TooLarge(n));
        }
        if k == 0 || k > MAX_COLORS {
            return Err(SearchError::BadColorCount(k));
        }
        let mut follows = vec![false; k + 1];
        for c in 2..=k {
            follows[c] = targets[c - 1] == targets[c - 2];
        }
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Ok(Self {
            n,
            k,
            objective,
            gallai,
            targets,
            max_incident,
            symmetry: opts.symmetry,
            follows,
            edges,
        })
    }

    fn m(&self) -> usize {
        self.edges.len()
    }

    fn solve(&self, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
        match opts.jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| SearchError::ThreadPool(e.to_string()))?
                .install(|| Ok(self.solve_in_pool(opts.budget))),
            None => Ok(self.solve_in_pool(opts.budget)),
        }
    }

    fn solve_in_pool(&self, budget: u64) -> SearchOutcome {
        let (prefixes, prefix_nodes) = self.prefixes();
        let shared = Shared {
            budget,
            nodes: AtomicU64::new(prefix_nodes),
            out_of_budget: AtomicBool::new(prefix_nodes > budget),
            best: AtomicU64::new(match self.objective {
                Objective::MinMonoTriangles => u64::MAX,
                _ => 0,
            }),
            found: AtomicUsize::new(usize::MAX),
        };
        let results: Vec<(usize, u64, Vec<Color>)> = prefixes
            .par_iter()
            .enumerate()
            .filter_map(|(index, prefix)| {
                let mut w = Worker::new(self, &shared, index);
                w.run(prefix);
                w.best.map(|(value, colors)| (index, value, colors))
            })
            .collect();

        let pick = match self.objective {
            Objective::MinMonoTriangles => results.into_iter().min_by_key(|r| (r.1, r.0)),
            Objective::MaxProtectedEdges => results
                .into_iter()
                .min_by_key(|r| (std::cmp::Reverse(r.1), r.0)),
            Objective::Avoid => results.into_iter().min_by_key(|r| r.0),
        };
        let (value, witness) = match pick {
            Some((_, value, colors)) => (
                value,
                Some(Coloring::from_pair_colors(self.n, self.k, colors).expect("complete assignment")),
            ),
            None => (0, None),
        };
        SearchOutcome {
            objective: self.objective,
            value,
            witness,
            nodes_explored: shared.nodes.load(Ordering::Relaxed),
            exhaustive: !shared.out_of_budget.load(Ordering::Relaxed),
        }
    }

    /// Valid partial assignments at the first depth with enough of them.
    fn prefixes(&self) -> (Vec<Vec<Color>>, u64) {
        let mut level: Vec<Vec<Color>> = vec![Vec::new()];
        let mut nodes = 0;
        let mut state = State::new(self);
        for _ in 0..self.m() {
            if level.len() >= PREFIX_TARGET || level.is_empty() {
                break;
            }
            let mut next = Vec::new();
            for prefix in &level {
                state.replay(prefix);
                for c in 1..=self.k as Color {
                    if state.apply(c) {
                        nodes += 1;
                        let mut longer = prefix.clone();
                        longer.push(c);
                        next.push(longer);
                        state.undo();
                    }
                }
            }
            level = next;
        }
        (level, nodes)
    }
}

struct Shared {
    budget: u64,
    nodes: AtomicU64,
    out_of_budget: AtomicBool,
    best: AtomicU64,
    found: AtomicUsize,
}

struct State<'a> {
    p: &'a Problem,
    // adj[(c - 1) * n + v]: color-c neighbors of v among assigned pairs
    adj: Vec<u64>,
    colors: Vec<Color>,
    color_edges: Vec<u32>,
    // incident[v * (k + 1) + c]
    incident: Vec<u32>,
    distinct: Vec<usize>,
    mono: u64,
    // bad[pair]: mono or rainbow triangles through the pair
    bad: Vec<u32>,
    bad_edges: u64,
    trail: Vec<u64>,
}

impl<'a> State<'a> {
    fn new(p: &'a Problem) -> Self {
        let m = p.m();
        Self {
            p,
            adj: vec![0; p.k * p.n],
            colors: Vec::with_capacity(m),
            color_edges: vec![0; p.k + 1],
            incident: vec![0; p.n * (p.k + 1)],
            distinct: vec![0; p.n],
            mono: 0,
            bad: vec![0; m],
            bad_edges: 0,
            trail: Vec::with_capacity(m),
        }
    }

    fn replay(&mut self, prefix: &[Color]) {
        while !self.colors.is_empty() {
            self.undo();
        }
        for &c in prefix {
            let ok = self.apply(c);
            debug_assert!(ok, "prefix replays");
        }
    }

    #[inline]
    fn row(&self, c: Color, v: usize) -> u64 {
        self.adj[(c as usize - 1) * self.p.n + v]
    }

    #[inline]
    fn toggle(&mut self, c: Color, u: usize, v: usize) {
        let base = (c as usize - 1) * self.p.n;
        self.adj[base + u] ^= 1 << v;
        self.adj[base + v] ^= 1 << u;
    }

    /// Assigns color `c` to the next pair, or leaves the state untouched
    /// and returns false if that breaks a constraint.
    fn apply(&mut self, c: Color) -> bool {
        let p = self.p;
        let i = self.colors.len();
        let (u, v) = p.edges[i];
        let ci = c as usize;
        if p.symmetry {
            if p.follows[ci] && self.color_edges[ci - 1] == 0 {
                return false;
            }
            if u == 0 && i > 0 && c < self.colors[i - 1] {
                return false;
            }
        }
        if let Some(limit) = p.max_incident {
            let stride = p.k + 1;
            for x in [u, v] {
                if self.incident[x * stride + ci] == 0 && self.distinct[x] >= limit {
                    return false;
                }
            }
        }

        let track_bad = p.objective == Objective::MaxProtectedEdges;
        let mut rainbow = 0u64;
        if p.gallai || track_bad {
            let below = (1u64 << u) - 1;
            let cv = self.row(c, v);
            for a in 1..=p.k as Color {
                if a != c {
                    rainbow |= self.row(a, u) & below & !(self.row(a, v) | cv);
                }
            }
            if p.gallai && rainbow != 0 {
                return false;
            }
        }
        let mono_ws = self.row(c, u) & self.row(c, v);
        match p.targets[ci - 1] {
            Target::K3 if mono_ws != 0 => return false,
            Target::K4PlusE => {
                self.toggle(c, u, v);
                if self.k4e_through(c, u, v) {
                    self.toggle(c, u, v);
                    return false;
                }
                self.toggle(c, u, v);
            }
            _ => {}
        }

        self.toggle(c, u, v);
        self.color_edges[ci] += 1;
        let stride = p.k + 1;
        for x in [u, v] {
            if self.incident[x * stride + ci] == 0 {
                self.distinct[x] += 1;
            }
            self.incident[x * stride + ci] += 1;
        }
        self.mono += mono_ws.count_ones() as u64;
        let bad_ws = if track_bad { mono_ws | rainbow } else { 0 };
        if bad_ws != 0 {
            let mut ws = bad_ws;
            while ws != 0 {
                let w = ws.trailing_zeros() as usize;
                ws &= ws - 1;
                self.bump(pair_index(p.n, w, u), 1);
                self.bump(pair_index(p.n, w, v), 1);
            }
            self.bump(i, bad_ws.count_ones());
        }
        self.trail.push(bad_ws);
        self.colors.push(c);
        true
    }

    fn undo(&mut self) {
        let p = self.p;
        let c = self.colors.pop().expect("nonempty");
        let bad_ws = self.trail.pop().expect("nonempty");
        let i = self.colors.len();
        let (u, v) = p.edges[i];
        let ci = c as usize;
        self.toggle(c, u, v);
        self.mono -= (self.row(c, u) & self.row(c, v)).count_ones() as u64;
        self.color_edges[ci] -= 1;
        let stride = p.k + 1;
        for x in [u, v] {
            self.incident[x * stride + ci] -= 1;
            if self.incident[x * stride + ci] == 0 {
                self.distinct[x] -= 1;
            }
        }
        if bad_ws != 0 {
            let mut ws = bad_ws;
            while ws != 0 {
                let w = ws.trailing_zeros() as usize;
                ws &= ws - 1;
                self.unbump(pair_index(p.n, w, u), 1);
                self.unbump(pair_index(p.n, w, v), 1);
            }
            self.unbump(i, bad_ws.count_ones());
        }
    }

    #[inline]
    fn bump(&mut self, pair: usize, by: u32) {
        if self.bad[pair] == 0 {
            self.bad_edges += 1;
        }
        self.bad[pair] += by;
    }

    #[inline]
    fn unbump(&mut self, pair: usize, by: u32) {
        self.bad[pair] -= by;
        if self.bad[pair] == 0 {
            self.bad_edges -= 1;
        }
    }

    /// With `uv` already present in color `c`: does a color-`c` `K_4+e`
    /// use it, either inside the `K_4` or as the pendant edge?
    fn k4e_through(&self, c: Color, u: usize, v: usize) -> bool {
        let common = self.row(c, u) & self.row(c, v);
        let deg = |x: usize| self.row(c, x).count_ones();
        let mut xs = common;
        while xs != 0 {
            let x = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            let mut ys = self.row(c, x) & common & xs;
            while ys != 0 {
                let y = ys.trailing_zeros() as usize;
                ys &= ys - 1;
                if [u, v, x, y].iter().any(|&z| deg(z) >= 4) {
                    return true;
                }
            }
        }
        self.has_triangle(c, self.row(c, u) & !(1 << v)) || self.has_triangle(c, self.row(c, v) & !(1 << u))
    }

    fn has_triangle(&self, c: Color, set: u64) -> bool {
        let mut xs = set;
        while xs != 0 {
            let x = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            let t = self.row(c, x) & xs;
            let mut ys = t;
            while ys != 0 {
                let y = ys.trailing_zeros() as usize;
                ys &= ys - 1;
                if self.row(c, y) & ys != 0 {
                    return true;
                }
            }
        }
        false
    }

    fn protected(&self) -> u64 {
        self.p.m() as u64 - self.bad_edges
    }
}

struct Worker<'a> {
    st: State<'a>,
    sh: &'a Shared,
    index: usize,
    pending: u64,
    halted: bool,
    best: Option<(u64, Vec<Color>)>,
}

impl<'a> Worker<'a> {
    fn new(p: &'a Problem, sh: &'a Shared, index: usize) -> Self {
        Self {
            st: State::new(p),
            sh,
            index,
            pending: 0,
            halted: false,
            best: None,
        }
    }

    fn run(&mut self, prefix: &[Color]) {
        if self.should_halt() {
            return;
        }
        self.st.replay(prefix);
        if !self.pruned() {
            self.dfs();
        }
        self.sh.nodes.fetch_add(self.pending, Ordering::Relaxed);
    }

    fn should_halt(&self) -> bool {
        self.sh.out_of_budget.load(Ordering::Relaxed) || self.sh.found.load(Ordering::Relaxed) < self.index
    }

    fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending == FLUSH_EVERY {
            let total = self.sh.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
            self.pending = 0;
            if total > self.sh.budget {
                self.sh.out_of_budget.store(true, Ordering::Relaxed);
            }
            self.halted = self.should_halt();
        }
        self.halted
    }

    fn pruned(&self) -> bool {
        let global = self.sh.best.load(Ordering::Relaxed);
        let local = self.best.as_ref().map(|b| b.0);
        match self.st.p.objective {
            Objective::MinMonoTriangles => {
                let mono = self.st.mono;
                mono > global || local.is_some_and(|b| mono >= b)
            }
            Objective::MaxProtectedEdges => {
                let bound = self.st.protected();
                bound < global || local.is_some_and(|b| bound <= b)
            }
            Objective::Avoid => false,
        }
    }

    /// Returns true when the whole search should stop.
    fn dfs(&mut self) -> bool {
        let p = self.st.p;
        if self.st.colors.len() == p.m() {
            return self.leaf();
        }
        for c in 1..=p.k as Color {
            if !self.st.apply(c) {
                continue;
            }
            let stop = self.tick() || (!self.pruned() && self.dfs());
            self.st.undo();
            if stop {
                return true;
            }
        }
        false
    }

    fn leaf(&mut self) -> bool {
        let value = match self.st.p.objective {
            Objective::MinMonoTriangles => self.st.mono,
            Objective::MaxProtectedEdges => self.st.protected(),
            Objective::Avoid => 1,
        };
        let better = match (&self.best, self.st.p.objective) {
            (None, _) => true,
            (Some((b, _)), Objective::MinMonoTriangles) => value < *b,
            (Some((b, _)), Objective::MaxProtectedEdges) => value > *b,
            (Some(_), Objective::Avoid) => false,
        };
        if better {
            self.best = Some((value, self.st.colors.clone()));
        }
        match self.st.p.objective {
            Objective::MinMonoTriangles => {
                self.sh.best.fetch_min(value, Ordering::Relaxed);
                false
            }
            Objective::MaxProtectedEdges => {
                self.sh.best.fetch_max(value, Ordering::Relaxed);
                false
            }
            Objective::Avoid => {
                self.sh.found.fetch_min(self.index, Ordering::Relaxed);
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::pair_count;
    use crate::census::{count_protected_edges, find_mono_subgraph, is_gallai, triangle_census, MonoKind};

    fn all_colorings(n: usize, k: usize) -> impl Iterator<Item = Coloring> {
        let m = pair_count(n);
        let total = (k as u64).pow(m as u32);
        (0..total).map(move |mut code| {
            let colors = (0..m)
                .map(|_| {
                    let c = (code % k as u64) as Color + 1;
                    code /= k as u64;
                    c
                })
                .collect();
            Coloring::from_pair_colors(n, k, colors).unwrap()
        })
    }

    fn avoids(c: &Coloring, targets: &[Target]) -> bool {
        targets.iter().enumerate().all(|(i, t)| {
            let kind = match t {
                Target::Free => return true,
                Target::K3 => MonoKind::K3,
                Target::K4PlusE => MonoKind::K4PlusE,
            };
            !find_mono_subgraph(c, i as Color + 1, kind).found()
        })
    }

    fn both_modes() -> [SearchOptions; 2] {
        [
            SearchOptions::default(),
            SearchOptions {
                symmetry: false,
                ..SearchOptions::default()
            },
        ]
    }

    #[test]
    fn min_mono_matches_brute_force() {
        for (n, k) in [(3, 2), (4, 2), (5, 2), (3, 3), (4, 3)] {
            for gallai in [false, true] {
                let want = all_colorings(n, k)
                    .filter(|c| !gallai || is_gallai(c))
                    .map(|c| triangle_census(&c).mono_total())
                    .min()
                    .unwrap();
                for opts in both_modes() {
                    let out = min_mono_triangles(n, k, gallai, &opts).unwrap();
                    assert!(out.exhaustive);
                    assert_eq!(out.value, want, "n = {n}, k = {k}, gallai = {gallai}");
                    let w = out.witness.unwrap();
                    assert_eq!(triangle_census(&w).mono_total(), want);
                    assert!(!gallai || is_gallai(&w));
                }
            }
        }
    }

    #[test]
    fn max_protected_matches_brute_force() {
        for (n, k) in [(3, 2), (4, 2), (5, 2), (4, 3)] {
            let want = all_colorings(n, k).map(|c| count_protected_edges(&c)).max().unwrap();
            for opts in both_modes() {
                let out = max_protected_edges(n, k, &opts).unwrap();
                assert_eq!(out.value, want, "n = {n}, k = {k}");
                assert_eq!(count_protected_edges(&out.witness.unwrap()), want);
            }
        }
    }

    #[test]
    fn avoidance_matches_brute_force() {
        use Target::*;
        let cases: &[(usize, &[Target])] = &[
            (4, &[K3, K3]),
            (5, &[K3, K3]),
            (5, &[K4PlusE, K3]),
            (5, &[K4PlusE, K4PlusE]),
            (4, &[K3, Free]),
            (4, &[K3, K3, K3]),
            (5, &[Free, K3, K3]),
        ];
        for &(n, targets) in cases {
            let k = targets.len();
            for gallai in [false, true] {
                let want_g = all_colorings(n, k).find(|c| avoids(c, targets) && (!gallai || is_gallai(c)));
                for opts in both_modes() {
                    let out = exists_avoiding(n, k, targets, gallai, &opts).unwrap();
                    assert_eq!(out.value == 1, want_g.is_some(), "{n} {targets:?} {gallai}");
                    if let Some(w) = out.witness {
                        assert!(avoids(&w, targets));
                        assert!(!gallai || is_gallai(&w));
                    }
                }
            }
        }
    }

    #[test]
    fn witness_is_lexicographically_first_without_symmetry() {
        let opts = SearchOptions {
            symmetry: false,
            ..SearchOptions::default()
        };
        let out = min_mono_triangles(5, 2, false, &opts).unwrap();
        let first = all_colorings(5, 2)
            .filter(|c| triangle_census(c).mono_total() == 0)
            .min_by(|a, b| a.pair_colors().cmp(b.pair_colors()))
            .unwrap();
        assert_eq!(out.witness.unwrap(), first);
    }

    #[test]
    fn results_do_not_depend_on_thread_count() {
        let one = SearchOptions {
            jobs: Some(1),
            ..SearchOptions::default()
        };
        let four = SearchOptions {
            jobs: Some(4),
            ..SearchOptions::default()
        };
        let a = min_mono_triangles(6, 2, false, &one).unwrap();
        let b = min_mono_triangles(6, 2, false, &four).unwrap();
        assert_eq!(a.value, 2);
        assert_eq!(a.witness, b.witness);
        let a = exists_avoiding(5, 2, &[Target::K3, Target::K3], false, &one).unwrap();
        let b = exists_avoiding(5, 2, &[Target::K3, Target::K3], false, &four).unwrap();
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn color_limit_is_respected() {
        let out = avoiding_with_color_limit(5, 3, &[Target::K3; 3], true, Some(2), &SearchOptions::default()).unwrap();
        let w = out.witness.unwrap();
        for v in 0..5 {
            let mut seen: Vec<Color> = (0..5).filter(|&x| x != v).map(|x| w.color(v, x)).collect();
            seen.sort_unstable();
            seen.dedup();
            assert!(seen.len() <= 2);
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let opts = SearchOptions {
            budget: 10,
            ..SearchOptions::default()
        };
        let out = min_mono_triangles(7, 2, false, &opts).unwrap();
        assert!(!out.exhaustive);
    }

    #[test]
    fn k4e_detection_agrees_with_census() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let opts = SearchOptions {
            symmetry: false,
            ..SearchOptions::default()
        };
        let p = Problem::new(9, 2, Objective::Avoid, false, vec![Target::Free; 2], None, &opts).unwrap();
        for _ in 0..300 {
            let mut st = State::new(&p);
            let mut seen = false;
            for i in 0..p.m() {
                let c = rng.gen_range(1..=2);
                assert!(st.apply(c));
                let (u, v) = p.edges[i];
                let now = st.k4e_through(c, u, v);
                seen |= now;
                let partial = Coloring::from_fn(9, 3, |a, b| {
                    let idx = pair_index(9, a, b);
                    st.colors.get(idx).copied().unwrap_or(3)
                })
                .unwrap();
                let census = (1..=2).any(|col| find_mono_subgraph(&partial, col, MonoKind::K4PlusE).found());
                assert_eq!(seen, census);
            }
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        let o = SearchOptions::default();
        assert!(min_mono_triangles(0, 2, false, &o).is_err());
        assert!(min_mono_triangles(65, 2, false, &o).is_err());
        assert!(exists_avoiding(5, 2, &[Target::K3], false, &o).is_err());
    }
}
