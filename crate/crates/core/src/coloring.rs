//! Edge-colorings of complete graphs and the `.gec` text format.
//!
//! Vertices are `0..n` in the Rust API and `1..=n` in every text format.
//! Colors are `1..=k` everywhere.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A color label in `1..=k`.
pub type Color = u8;

/// Largest number of colors a [`Coloring`] may declare.
pub const MAX_COLORS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected \"n k\"")]
    Header { line: usize },
    #[error("line {line}: malformed pair line, expected \"u v c\"")]
    PairLine { line: usize },
    #[error("line {line}: vertex pair ({u}, {v}) out of range or not u < v")]
    BadPair { line: usize, u: usize, v: usize },
    #[error("line {line}: pair ({u}, {v}) listed twice")]
    DuplicatePair { line: usize, u: usize, v: usize },
    #[error("line {line}: color {color} outside 1..={k}")]
    ColorOutOfRange { line: usize, color: usize, k: usize },
    #[error("line {line}: pair ({u}, {v}) has no color")]
    MissingPair { line: usize, u: usize, v: usize },
    #[error("empty input")]
    Empty,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("a coloring needs n >= 1 and 1 <= k <= {MAX_COLORS} (got n = {n}, k = {k})")]
    Shape { n: usize, k: usize },
    #[error("color {color} outside 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("expected {expected} pair colors, got {got}")]
    Length { expected: usize, got: usize },
}

/// Number of unordered pairs on `n` vertices.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `{u, v}` (0-based, `u != v`) in lexicographic pair order.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u != v && u < n && v < n);
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// A total map from the pairs of `K_n` to colors in `1..=k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    n: usize,
    k: usize,
    colors: Vec<Color>,
}

impl Coloring {
    /// The coloring of `K_n` with every pair colored `color`.
    pub fn monochromatic(n: usize, k: usize, color: Color) -> Result<Self, ColoringError> {
        Self::from_fn(n, k, |_, _| color)
    }

    /// Builds a coloring by evaluating `f(u, v)` for every pair `u < v`.
    pub fn from_fn(
        n: usize,
        k: usize,
        mut f: impl FnMut(usize, usize) -> Color,
    ) -> Result<Self, ColoringError> {
        let mut colors = Vec::with_capacity(pair_count(n));
        for u in 0..n {
            for v in u + 1..n {
                colors.push(f(u, v));
            }
        }
        Self::from_pair_colors(n, k, colors)
    }

    /// Builds a coloring from colors already laid out in lexicographic pair order.
    pub fn from_pair_colors(n: usize, k: usize, colors: Vec<Color>) -> Result<Self, ColoringError> {
        if n == 0 || k == 0 || k > MAX_COLORS {
            return Err(ColoringError::Shape { n, k });
        }
        if colors.len() != pair_count(n) {
            return Err(ColoringError::Length {
                expected: pair_count(n),
                got: colors.len(),
            });
        }
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c as usize > k) {
            return Err(ColoringError::ColorOutOfRange {
                color: bad as usize,
                k,
            });
        }
        Ok(Self { n, k, colors })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Declared size of the color universe.
    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        self.colors[pair_index(self.n, u, v)]
    }

    /// Pair colors in lexicographic pair order.
    #[inline]
    pub fn pair_colors(&self) -> &[Color] {
        &self.colors
    }

    /// Iterates `(u, v, color)` over all pairs `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
            .zip(self.colors.iter().copied())
            .map(|((u, v), c)| (u, v, c))
    }

    /// Colors that actually appear on some pair, ascending.
    pub fn used_colors(&self) -> Vec<Color> {
        let mut seen = [false; MAX_COLORS + 1];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        (1..=self.k as Color).filter(|&c| seen[c as usize]).collect()
    }

    /// Same pairs, larger declared color universe.
    pub fn with_k(&self, k: usize) -> Result<Self, ColoringError> {
        Self::from_pair_colors(self.n, k, self.colors.clone())
    }

    /// Relabels vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permute_vertices(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut colors = vec![0; self.colors.len()];
        for (u, v, c) in self.edges() {
            colors[pair_index(self.n, perm[u], perm[v])] = c;
        }
        Self {
            n: self.n,
            k: self.k,
            colors,
        }
    }

    /// Renames colors: color `c` becomes `map[c - 1]`.
    pub fn permute_colors(&self, map: &[Color]) -> Self {
        assert_eq!(map.len(), self.k, "color map length must equal k");
        Self {
            n: self.n,
            k: self.k,
            colors: self.colors.iter().map(|&c| map[c as usize - 1]).collect(),
        }
    }

    /// The coloring induced on `vertices` (renumbered in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let m = vertices.len();
        let mut colors = Vec::with_capacity(pair_count(m));
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                colors.push(self.color(a, b));
            }
        }
        Self {
            n: m,
            k: self.k,
            colors,
        }
    }

    /// Serializes in `.gec` form with pairs in lexicographic order.
    pub fn to_gec(&self) -> String {
        self.to_string()
    }

    pub fn parse_gec(text: &str) -> Result<Self, ParseError> {
        let mut lines = meaningful_lines(text);
        let (line, header) = lines.next().ok_or(ParseError::Empty)?;
        let (n, k) = parse_header(line, header)?;
        let mut builder = PairTable::new(n, k);
        for (line, content) in lines {
            builder.insert_line(line, content)?;
        }
        builder.finish()
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring(n={}, k={}, {:?})", self.n, self.k, self.colors)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.k)?;
        for (u, v, c) in self.edges() {
            writeln!(f, "{} {} {}", u + 1, v + 1, c)?;
        }
        Ok(())
    }
}

impl FromStr for Coloring {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_gec(s)
    }
}

/// Non-empty, non-comment lines with 1-based line numbers.
pub(crate) fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_header(line: usize, content: &str) -> Result<(usize, usize), ParseError> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    match fields.as_slice() {
        [n, k] => {
            let n: usize = n.parse().map_err(|_| ParseError::Header { line })?;
            let k: usize = k.parse().map_err(|_| ParseError::Header { line })?;
            if n == 0 || k == 0 || k > MAX_COLORS {
                return Err(ParseError::Header { line });
            }
            Ok((n, k))
        }
        _ => Err(ParseError::Header { line }),
    }
}

/// Accumulates `u v c` lines and checks coverage.
pub(crate) struct PairTable {
    n: usize,
    k: usize,
    colors: Vec<Color>,
}

impl PairTable {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            colors: vec![0; pair_count(n)],
        }
    }

    pub(crate) fn insert_line(&mut self, line: usize, content: &str) -> Result<(), ParseError> {
        let fields: Vec<usize> = content
            .split_whitespace()
            .map(|f| f.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| ParseError::PairLine { line })?;
        let [u, v, c] = fields[..] else {
            return Err(ParseError::PairLine { line });
        };
        if u == 0 || u >= v || v > self.n {
            return Err(ParseError::BadPair { line, u, v });
        }
        if c == 0 || c > self.k {
            return Err(ParseError::ColorOutOfRange {
                line,
                color: c,
                k: self.k,
            });
        }
        let slot = &mut self.colors[pair_index(self.n, u - 1, v - 1)];
        if *slot != 0 {
            return Err(ParseError::DuplicatePair { line, u, v });
        }
        *slot = c as Color;
        Ok(())
    }

    pub(crate) fn finish(self) -> Result<Coloring, ParseError> {
        if let Some(pos) = self.colors.iter().position(|&c| c == 0) {
            let (u, v) = pair_from_index(self.n, pos);
            return Err(ParseError::MissingPair {
                line: 0,
                u: u + 1,
                v: v + 1,
            });
        }
        Ok(Coloring {
            n: self.n,
            k: self.k,
            colors: self.colors,
        })
    }
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(n: usize, mut idx: usize) -> (usize, usize) {
    let mut u = 0;
    loop {
        let row = n - u - 1;
        if idx < row {
            return (u, u + 1 + idx);
        }
        idx -= row;
        u += 1;
    }
}
