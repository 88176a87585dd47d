//! Generators for explicit colorings: gadgets, blow-ups and the extremal
//! families built from them.

mod extremal;
mod gadgets;
mod nim;
pub mod random;

pub use extremal::{
    construct_f_lower, construct_gr_k3_extremal, construct_gr_k4e_extremal,
    construct_multiplicity_extremal, triangle_free_base, turan_parts,
};
pub use gadgets::{goodman_extremal_2coloring, paley17_coloring, pentagon_coloring};
pub use nim::{construct_nim_star, star_free_base_graph, NimStar};

use thiserror::Error;

use crate::coloring::{pair_index, Color, Coloring, ColoringError};
use crate::formulas::FormulaError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("blow-up needs at least one insert")]
    EmptyInserts,
    #[error("blow-up of a {base}-vertex base needs {base} inserts, got {got}")]
    InsertCount { base: usize, got: usize },
    #[error("insert {index} declares k = {got}, base declares k = {expected}")]
    MismatchedK {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("gadget colors must differ (both are {0})")]
    SameColors(Color),
    #[error("{0}")]
    Precondition(String),
    #[error("overlap repair did not converge within {0} switches")]
    RepairStalled(usize),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// A base coloring and one insert per base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    pub base: Coloring,
    pub inserts: Vec<Coloring>,
}

impl BlowupSpec {
    /// The base with `count` copies of `first` followed by copies of `rest`.
    pub fn two_kinds(base: Coloring, count: usize, first: &Coloring, rest: &Coloring) -> Self {
        let t = base.n();
        let inserts = (0..t)
            .map(|i| if i < count { first.clone() } else { rest.clone() })
            .collect();
        Self { base, inserts }
    }

    pub fn uniform(base: Coloring, insert: &Coloring) -> Self {
        let t = base.n();
        Self {
            base,
            inserts: vec![insert.clone(); t],
        }
    }
}

/// Replaces base vertex `i` by a copy of `inserts[i]`; cross-copy pairs take
/// the base color. Copies are laid out consecutively in base-vertex order.
pub fn blow_up(spec: &BlowupSpec) -> Result<Coloring, ConstructError> {
    let BlowupSpec { base, inserts } = spec;
    if inserts.is_empty() {
        return Err(ConstructError::EmptyInserts);
    }
    if inserts.len() != base.n() {
        return Err(ConstructError::InsertCount {
            base: base.n(),
            got: inserts.len(),
        });
    }
    if let Some((index, h)) = inserts.iter().enumerate().find(|(_, h)| h.k() != base.k()) {
        return Err(ConstructError::MismatchedK {
            index,
            expected: base.k(),
            got: h.k(),
        });
    }
    let mut owner = Vec::new();
    let mut local = Vec::new();
    for (i, h) in inserts.iter().enumerate() {
        for x in 0..h.n() {
            owner.push(i);
            local.push(x);
        }
    }
    let n = owner.len();
    let c = Coloring::from_fn(n, base.k(), |u, v| {
        let (a, b) = (owner[u], owner[v]);
        if a == b {
            inserts[a].color(local[u], local[v])
        } else {
            base.color(a, b)
        }
    })?;
    Ok(c)
}

/// Two copies of `g` with every cross pair colored `color`.
pub fn join_two_copies(g: &Coloring, color: Color) -> Result<Coloring, ConstructError> {
    let base = Coloring::monochromatic(2, g.k(), color)?;
    blow_up(&BlowupSpec::uniform(base, g))
}

/// Colors the listed edges with `on` and everything else with `off`.
pub(crate) fn from_edge_list(
    n: usize,
    k: usize,
    edges: &[(usize, usize)],
    on: Color,
    off: Color,
) -> Result<Coloring, ColoringError> {
    let mut colors = vec![off; n * n.saturating_sub(1) / 2];
    for &(u, v) in edges {
        colors[pair_index(n, u, v)] = on;
    }
    Coloring::from_pair_colors(n, k, colors)
}
