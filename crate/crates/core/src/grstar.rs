//! Extended colorings: colors on single vertices as well as on pairs.
//!
//! An extended coloring passes when its pair coloring is Gallai, has no
//! monochromatic triangle, and no pair shares a color with either endpoint.
//! The largest passing order with `k` colors equals the largest Gallai
//! `(k-1)`-coloring without monochromatic triangles.
//!
//! `.gecx` files are `.gec` files with a `SINGLETONS` marker line after the
//! header followed by one `v c` line per vertex. An optional `PAIRS` marker
//! may precede the pair lines.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::census::triangle_census;
use crate::coloring::{meaningful_lines, parse_header, Color, Coloring, ParseError, PairTable};
use crate::search::{avoiding_with_color_limit, SearchError, SearchOptions, Target};

const FIGURE1: &str = include_str!("../data/figure1.gecx");

/// Largest order and palette accepted by [`max_gr_star_witness`].
pub const MAX_WITNESS_N: usize = 8;
pub const MAX_WITNESS_K: usize = 3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrStarError {
    #[error("expected {expected} singleton colors, got {got}")]
    Length { expected: usize, got: usize },
    #[error("vertex {vertex}: singleton color {color} outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("line {line}: malformed singleton line, expected \"v c\"")]
    SingletonLine { line: usize },
    #[error("line {line}: vertex {vertex} out of range")]
    BadVertex { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} colored twice")]
    DuplicateSingleton { line: usize, vertex: usize },
    #[error("vertex {vertex} has no singleton color")]
    MissingSingleton { vertex: usize },
    #[error("missing SINGLETONS section")]
    NoSingletons,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A pair coloring together with a color on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedColoring {
    pairs: Coloring,
    singletons: Vec<Color>,
}

impl ExtendedColoring {
    pub fn new(pairs: Coloring, singletons: Vec<Color>) -> Result<Self, GrStarError> {
        if singletons.len() != pairs.n() {
            return Err(GrStarError::Length {
                expected: pairs.n(),
                got: singletons.len(),
            });
        }
        if let Some(v) = singletons.iter().position(|&c| c == 0 || c as usize > pairs.k()) {
            return Err(GrStarError::ColorOutOfRange {
                vertex: v + 1,
                color: singletons[v] as usize,
                k: pairs.k(),
            });
        }
        Ok(Self { pairs, singletons })
    }

    /// Every vertex gets `color`.
    pub fn with_constant_singletons(pairs: Coloring, color: Color) -> Result<Self, GrStarError> {
        let singletons = vec![color; pairs.n()];
        Self::new(pairs, singletons)
    }

    pub fn pairs(&self) -> &Coloring {
        &self.pairs
    }

    pub fn singletons(&self) -> &[Color] {
        &self.singletons
    }

    pub fn n(&self) -> usize {
        self.pairs.n()
    }

    pub fn k(&self) -> usize {
        self.pairs.k()
    }

    pub fn to_gecx(&self) -> String {
        self.to_string()
    }

    pub fn parse_gecx(text: &str) -> Result<Self, GrStarError> {
        let mut lines = meaningful_lines(text);
        let (line, header) = lines.next().ok_or(ParseError::Empty)?;
        let (n, k) = parse_header(line, header)?;
        let mut table = PairTable::new(n, k);
        let mut singletons: Option<Vec<Color>> = None;
        for (line, content) in lines {
            if content.eq_ignore_ascii_case("SINGLETONS") {
                singletons.get_or_insert_with(|| vec![0; n]);
                continue;
            }
            if content.eq_ignore_ascii_case("PAIRS") {
                continue;
            }
            match (content.split_whitespace().count(), singletons.as_mut()) {
                (2, Some(slots)) => read_singleton(line, content, k, slots)?,
                (2, None) => return Err(GrStarError::NoSingletons),
                _ => table.insert_line(line, content)?,
            }
        }
        let singletons = singletons.ok_or(GrStarError::NoSingletons)?;
        if let Some(v) = singletons.iter().position(|&c| c == 0) {
            return Err(GrStarError::MissingSingleton { vertex: v + 1 });
        }
        Self::new(table.finish()?, singletons)
    }
}

fn read_singleton(line: usize, content: &str, k: usize, slots: &mut [Color]) -> Result<(), GrStarError> {
    let fields: Vec<usize> = content
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| GrStarError::SingletonLine { line })?;
    let [v, c] = fields[..] else {
        return Err(GrStarError::SingletonLine { line });
    };
    if v == 0 || v > slots.len() {
        return Err(GrStarError::BadVertex { line, vertex: v });
    }
    if c == 0 || c > k {
        return Err(GrStarError::ColorOutOfRange { vertex: v, color: c, k });
    }
    if slots[v - 1] != 0 {
        return Err(GrStarError::DuplicateSingleton { line, vertex: v });
    }
    slots[v - 1] = c as Color;
    Ok(())
}

impl fmt::Display for ExtendedColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n(), self.k())?;
        writeln!(f, "SINGLETONS")?;
        for (v, c) in self.singletons.iter().enumerate() {
            writeln!(f, "{} {}", v + 1, c)?;
        }
        writeln!(f, "PAIRS")?;
        for (u, v, c) in self.pairs.edges() {
            writeln!(f, "{} {} {}", u + 1, v + 1, c)?;
        }
        Ok(())
    }
}

impl FromStr for ExtendedColoring {
    type Err = GrStarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_gecx(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GrStarReport {
    pub gallai: bool,
    pub mono_triangle_free: bool,
    /// First pair `(i, j)`, `i < j`, 0-based, colored like `i` or like `j`.
    pub singleton_clash: Option<(usize, usize)>,
}

impl GrStarReport {
    pub fn passes(&self) -> bool {
        self.gallai && self.mono_triangle_free && self.singleton_clash.is_none()
    }
}

pub fn check_gr_star_conditions(e: &ExtendedColoring) -> GrStarReport {
    let census = triangle_census(&e.pairs);
    let s = &e.singletons;
    let singleton_clash = e
        .pairs
        .edges()
        .find(|&(u, v, c)| c == s[u] || c == s[v])
        .map(|(u, v, _)| (u, v));
    GrStarReport {
        gallai: census.rainbow == 0,
        mono_triangle_free: census.mono_total() == 0,
        singleton_clash,
    }
}

/// The 10-vertex, 4-color extremal extended coloring with red and blue
/// singletons.
pub fn figure1_fixture() -> ExtendedColoring {
    FIGURE1.parse().expect("bundled fixture parses")
}

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("witness search supports 1 <= n <= {MAX_WITNESS_N} and 1 <= k <= {MAX_WITNESS_K} (got n = {n}, k = {k})")]
    Bounds { n: usize, k: usize },
    #[error(transparent)]
    Search(#[from] SearchError),
}

#[derive(Clone, Debug)]
pub struct GrStarWitness {
    pub exists: bool,
    pub witness: Option<ExtendedColoring>,
    pub nodes_explored: u64,
    pub exhaustive: bool,
}

/// Whether some passing extended coloring on `n` vertices with `k` colors
/// exists.
///
/// A pair coloring extends iff it is Gallai, has no monochromatic triangle,
/// and every vertex misses some color on its edges; the vertex then takes
/// the smallest missing color.
pub fn max_gr_star_witness(n: usize, k: usize, opts: &SearchOptions) -> Result<GrStarWitness, WitnessError> {
    if n == 0 || n > MAX_WITNESS_N || k == 0 || k > MAX_WITNESS_K {
        return Err(WitnessError::Bounds { n, k });
    }
    let out = avoiding_with_color_limit(n, k, &vec![Target::K3; k], true, Some(k - 1), opts)?;
    let witness = out.witness.map(|pairs| {
        let singletons = (0..n)
            .map(|v| {
                (1..=k as Color)
                    .find(|&c| (0..n).all(|w| w == v || pairs.color(v, w) != c))
                    .expect("a color is missing at every vertex")
            })
            .collect();
        ExtendedColoring::new(pairs, singletons).expect("colors in range")
    });
    Ok(GrStarWitness {
        exists: witness.is_some(),
        witness,
        nodes_explored: out.nodes_explored,
        exhaustive: out.exhaustive,
    })
}
