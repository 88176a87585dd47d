//! Self-check battery behind `gallai verify-suite`.
//!
//! `Fast` covers the small exhaustive oracles, the gadgets and the bundled
//! fixture. `Full` adds every construction family at its checked sizes, the
//! partition algorithm on random blow-ups and the randomized invariance
//! sweep.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::census::{
    count_nim_star_edges, count_protected_edges, find_mono_subgraph, is_gallai, triangle_census,
    MonoKind,
};
use crate::coloring::Color;
use crate::construct::random::{random_coloring, random_gallai};
use crate::construct::{
    construct_f_lower, construct_gr_k3_extremal, construct_gr_k4e_extremal,
    construct_multiplicity_extremal, construct_nim_star, paley17_coloring, pentagon_coloring,
};
use crate::formulas::{
    ex_star, g_mixed, g_multiplicity_bounds, goodman_m2, gr_k3, gr_star_k3, turan_count, to_usize,
};
use crate::grstar::{check_gr_star_conditions, figure1_fixture, max_gr_star_witness};
use crate::partition::{find_gallai_partition, verify_gallai_partition};
use crate::search::{exists_avoiding, min_mono_triangles, SearchOptions, Target};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Fast,
    Full,
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown level `{other}` (expected fast or full)")),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Fast => "fast",
            Level::Full => "full",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub level: Level,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type Check = fn(Level) -> Result<String, String>;

const CHECKS: &[(&str, Check, bool)] = &[
    ("goodman-oracle", goodman_oracle, true),
    ("ramsey-brackets", ramsey_brackets, true),
    ("gadgets", gadgets, true),
    ("figure1-fixture", figure1, true),
    ("gr-star-flips", gr_star_flips, true),
    ("gr-k3-witnesses", gr_k3_witnesses, true),
    ("gr-k4e-constructions", gr_k4e_constructions, false),
    ("multiplicity", multiplicity, false),
    ("protected-edges", protected_edges, false),
    ("gallai-partition", gallai_partition, false),
    ("nim-star", nim_star, false),
    ("random-invariance", random_invariance, false),
];

pub fn verify_suite(level: Level) -> SuiteReport {
    let checks = CHECKS
        .iter()
        .filter(|(_, _, fast)| *fast || level == Level::Full)
        .map(|&(name, check, _)| {
            let start = Instant::now();
            let outcome = catch_unwind(AssertUnwindSafe(|| check(level)))
                .unwrap_or_else(|_| Err("panicked".to_string()));
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult {
                name,
                passed,
                detail,
                seconds: start.elapsed().as_secs_f64(),
            }
        })
        .collect();
    SuiteReport {
        schema: "1",
        level,
        checks,
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn goodman_oracle(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 7 } else { 6 };
    let opts = SearchOptions::default();
    for n in 3..=top {
        let out = min_mono_triangles(n, 2, false, &opts).map_err(err)?;
        ensure(out.exhaustive && big(out.value) == goodman_m2(n as u64), || {
            format!("n = {n}: search {} vs formula {}", out.value, goodman_m2(n as u64))
        })?;
    }
    Ok(format!("n = 3..={top}"))
}

fn ramsey_brackets(_: Level) -> Result<String, String> {
    let opts = SearchOptions::default();
    let cases = [([Target::K3, Target::K3], 6), ([Target::K4PlusE, Target::K3], 9)];
    for (targets, r) in cases {
        let below = exists_avoiding(r - 1, 2, &targets, false, &opts).map_err(err)?;
        let at = exists_avoiding(r, 2, &targets, false, &opts).map_err(err)?;
        ensure(below.value == 1 && at.value == 0 && at.exhaustive, || {
            format!("{targets:?}: n = {} -> {}, n = {r} -> {}", r - 1, below.value, at.value)
        })?;
    }
    Ok("R(K3,K3) = 6, R(K4+e,K3) = 9".into())
}

fn gadgets(_: Level) -> Result<String, String> {
    let p = pentagon_coloring(1, 2, 2).map_err(err)?;
    ensure(triangle_census(&p).mono_total() == 0, || "pentagon has a monochromatic triangle".into())?;
    let q = paley17_coloring(1, 2, 2).map_err(err)?;
    for color in [1, 2] {
        ensure(!find_mono_subgraph(&q, color, MonoKind::K4).found(), || {
            format!("Paley coloring has a color-{color} K4")
        })?;
    }
    Ok("pentagon, Paley-17".into())
}

fn figure1(_: Level) -> Result<String, String> {
    let f = figure1_fixture();
    let report = check_gr_star_conditions(&f);
    let mut colors = f.singletons().to_vec();
    colors.sort_unstable();
    colors.dedup();
    ensure(report.passes() && f.n() == 10 && f.k() == 4 && colors.len() == 2, || {
        format!("{report:?}")
    })?;
    Ok("10 vertices, 4 colors".into())
}

fn gr_star_flips(_: Level) -> Result<String, String> {
    let opts = SearchOptions::default();
    for k in 2..=3usize {
        let gr = to_usize(&gr_star_k3(k as u64).map_err(err)?).expect("small");
        let below = max_gr_star_witness(gr - 1, k, &opts).map_err(err)?;
        let at = max_gr_star_witness(gr, k, &opts).map_err(err)?;
        ensure(below.exists && !at.exists && at.exhaustive, || {
            format!("k = {k}: flip not at n = {gr}")
        })?;
    }
    Ok("k = 2, 3".into())
}

fn gr_k3_witnesses(level: Level) -> Result<String, String> {
    let top = if level == Level::Full { 5 } else { 4 };
    for k in 1..=top {
        let c = construct_gr_k3_extremal(k).map_err(err)?;
        let census = triangle_census(&c);
        ensure(
            big(c.n() as u64 + 1) == gr_k3(k as u64).map_err(err)?
                && census.rainbow == 0
                && census.mono_total() == 0,
            || format!("k = {k}: n = {}, census {census:?}", c.n()),
        )?;
    }
    Ok(format!("k = 1..={top}"))
}

fn gr_k4e_constructions(_: Level) -> Result<String, String> {
    let mut checked = 0;
    // g(k, s) >= g(k, 0) > 300 once k >= 8
    for k in 1..=8usize {
        for s in 0..=k {
            let size = g_mixed(k as u64, s as u64).map_err(err)?;
            if size > big(300) {
                continue;
            }
            let c = construct_gr_k4e_extremal(k, s).map_err(err)?;
            ensure(big(c.n() as u64) == size && is_gallai(&c), || format!("(k, s) = ({k}, {s})"))?;
            for color in 1..=k as Color {
                let kind = if (color as usize) <= s { MonoKind::K4PlusE } else { MonoKind::K3 };
                ensure(!find_mono_subgraph(&c, color, kind).found(), || {
                    format!("(k, s) = ({k}, {s}): color {color} has a {kind:?}")
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (k, s) pairs"))
}

fn multiplicity(_: Level) -> Result<String, String> {
    for k in 1..=4usize {
        let gr = to_usize(&gr_k3(k as u64).map_err(err)?).expect("small");
        for n in gr..=gr + 30 {
            let c = construct_multiplicity_extremal(k, n).map_err(err)?;
            let b = g_multiplicity_bounds(k as u64, n as u64).map_err(err)?;
            let mono = big(triangle_census(&c).mono_total());
            ensure(is_gallai(&c) && mono == b.upper && b.lower <= mono, || {
                format!("k = {k}, n = {n}: mono {mono}, bounds {b:?}")
            })?;
        }
    }
    for t in 0..=4u64 {
        let c = construct_multiplicity_extremal(3, 11 + t as usize).map_err(err)?;
        ensure(triangle_census(&c).mono_total() == t + 1, || format!("k = 3, n = {}", 11 + t))?;
    }
    Ok("k = 1..=4, n up to GR + 30".into())
}

fn protected_edges(_: Level) -> Result<String, String> {
    for (n, k) in [(6, 2), (20, 2), (30, 3), (55, 4)] {
        let c = construct_f_lower(n, k).map_err(err)?;
        let r = gr_k3(k as u64 - 1).map_err(err)? - 1u32;
        let want = turan_count(n as u64, to_usize(&r).expect("small") as u64).map_err(err)?;
        let got = big(count_protected_edges(&c));
        ensure(got == want, || format!("(n, k) = ({n}, {k}): {got} vs {want}"))?;
    }
    Ok("4 instances".into())
}

fn gallai_partition(_: Level) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a11a1);
    let mut colorings = vec![
        construct_gr_k3_extremal(4).map_err(err)?,
        construct_gr_k4e_extremal(2, 2).map_err(err)?,
        construct_multiplicity_extremal(3, 13).map_err(err)?,
        construct_f_lower(20, 3).map_err(err)?,
    ];
    for _ in 0..1000 {
        let n = rng.gen_range(2..=60);
        let k = rng.gen_range(1..=6);
        colorings.push(random_gallai(n, k, &mut rng));
    }
    for c in &colorings {
        let p = find_gallai_partition(c).map_err(err)?;
        ensure(verify_gallai_partition(c, &p), || format!("invalid partition on n = {}", c.n()))?;
    }
    Ok(format!("{} colorings", colorings.len()))
}

fn nim_star(_: Level) -> Result<String, String> {
    for (n, h, k) in [(20, 3, 3), (40, 3, 4), (40, 4, 3), (30, 3, 2)] {
        let r = construct_nim_star(n, h, k, 0).map_err(err)?;
        let got = big(count_nim_star_edges(&r.coloring, h));
        let ex = ex_star(n as u64, h as u64).map_err(err)?;
        let want = &ex * (k as u64 - 1);
        let ok = if k == 2 { got == ex } else { got >= want };
        ensure(ok, || format!("(n, h, k) = ({n}, {h}, {k}): {got} vs {want}"))?;
    }
    Ok("4 instances".into())
}

fn random_invariance(_: Level) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1c0107);
    let trials = 10_000;
    for _ in 0..trials {
        let n = rng.gen_range(1..=30);
        let k = rng.gen_range(1..=6);
        let h = rng.gen_range(1..=4);
        let c = random_coloring(n, k, &mut rng);
        let census = triangle_census(&c);
        let triples = (n * n.saturating_sub(1) * n.saturating_sub(2) / 6) as u64;
        ensure(census.total() == triples, || format!("conservation fails on n = {n}"))?;

        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut map: Vec<Color> = (1..=k as Color).collect();
        map.shuffle(&mut rng);
        let moved = c.permute_vertices(&perm).permute_colors(&map);
        let other = triangle_census(&moved);
        let mut expect = vec![0; k];
        for (i, &m) in census.mono_per_color.iter().enumerate() {
            expect[map[i] as usize - 1] = m;
        }
        ensure(
            other.mono_per_color == expect
                && other.bichromatic == census.bichromatic
                && other.rainbow == census.rainbow
                && count_protected_edges(&moved) == count_protected_edges(&c)
                && count_nim_star_edges(&moved, h) == count_nim_star_edges(&c, h),
            || format!("permutation changed a count on n = {n}, k = {k}"),
        )?;
    }
    Ok(format!("{trials} colorings"))
}
