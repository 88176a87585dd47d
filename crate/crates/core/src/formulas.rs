//! Closed-form values: Goodman's minimum, Gallai-Ramsey numbers, Turán counts,
//! multiplicity bounds. All arithmetic is exact.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{name} requires {requirement}")]
    Domain {
        name: &'static str,
        requirement: String,
    },
}

fn domain(name: &'static str, requirement: impl Into<String>) -> FormulaError {
    FormulaError::Domain {
        name,
        requirement: requirement.into(),
    }
}

/// Whether a formula value is proven for every `n` or only for large `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Validity {
    Exact,
    AsymptoticOnly,
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Validity::Exact => "exact",
            Validity::AsymptoticOnly => "asymptotic-only",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GuardedValue {
    #[serde(serialize_with = "ser_big")]
    pub value: BigUint,
    pub validity: Validity,
}

fn ser_big<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn pow(base: u64, exp: u64) -> BigUint {
    num_traits::pow(big(base), exp as usize)
}

/// `C(m, 3)`, zero whenever `m < 3`.
pub fn choose3(m: &BigUint) -> BigUint {
    if *m < big(3) {
        return BigUint::zero();
    }
    m * (m - 1u32) * (m - 2u32) / 6u32
}

/// `C(n, 2)` as an exact integer.
pub fn choose2(n: u64) -> BigUint {
    big(n) * big(n.saturating_sub(1)) / 2u32
}

/// Minimum number of monochromatic triangles over all 2-colorings of `K_n`.
///
/// Small `n` where the case polynomial goes negative clamp to zero.
pub fn goodman_m2(n: u64) -> BigUint {
    // the i128 polynomial is exact only while n^3 fits
    if n >= 1 << 40 {
        return goodman_m2_big(n);
    }
    let n = n as i128;
    let v = if n % 2 == 0 {
        n * (n - 2) * (n - 4) / 24
    } else if n % 4 == 1 {
        n * (n - 1) * (n - 5) / 24
    } else {
        (n + 1) * (n - 3) * (n - 4) / 24
    };
    BigUint::from(v.max(0) as u128)
}

fn goodman_m2_big(n: u64) -> BigUint {
    let b = big(n);
    if n % 2 == 0 {
        &b * (&b - 2u32) * (&b - 4u32) / 24u32
    } else if n % 4 == 1 {
        &b * (&b - 1u32) * (&b - 5u32) / 24u32
    } else {
        (&b + 1u32) * (&b - 3u32) * (&b - 4u32) / 24u32
    }
}

/// `r·C(m+1,3) + (5-r)·C(m,3)` with `n = 5m + r`; proven only for large `n`.
pub fn m3_formula(n: u64) -> GuardedValue {
    let m = big(n / 5);
    let r = big(n % 5);
    let value = &r * choose3(&(&m + 1u32)) + (big(5) - &r) * choose3(&m);
    GuardedValue {
        value,
        validity: Validity::AsymptoticOnly,
    }
}

/// `GR_k(K_3)`: `5^{k/2}+1` for even `k`, `2·5^{(k-1)/2}+1` for odd `k`.
pub fn gr_k3(k: u64) -> Result<BigUint, FormulaError> {
    if k == 0 {
        return Err(domain("gr_k3", "k >= 1"));
    }
    Ok(if k % 2 == 0 {
        pow(5, k / 2) + 1u32
    } else {
        pow(5, (k - 1) / 2) * 2u32 + 1u32
    })
}

/// `g(k, s)`: the largest order of a Gallai-`k`-coloring with no
/// monochromatic `K_4+e` in colors `1..=s` and no monochromatic triangle in
/// colors `s+1..=k`.
pub fn g_mixed(k: u64, s: u64) -> Result<BigUint, FormulaError> {
    if k == 0 || s > k {
        return Err(domain("gr_mixed_k4e", "k >= 1 and 0 <= s <= k"));
    }
    let t = k - s;
    Ok(match (s % 2, t % 2) {
        (0, 0) => pow(17, s / 2) * pow(5, t / 2),
        (0, _) => pow(17, s / 2) * pow(5, (t - 1) / 2) * 2u32,
        (_, 1) => pow(17, (s - 1) / 2) * pow(5, (t - 1) / 2) * 8u32,
        _ => pow(17, (s - 1) / 2) * pow(5, t / 2) * 4u32,
    })
}

/// `GR_k(s·(K_4+e), (k-s)·K_3) = g(k, s) + 1`.
pub fn gr_mixed_k4e(k: u64, s: u64) -> Result<BigUint, FormulaError> {
    Ok(g_mixed(k, s)? + 1u32)
}

/// `GR*_k(K_3) = GR_{k-1}(K_3)`.
pub fn gr_star_k3(k: u64) -> Result<BigUint, FormulaError> {
    if k < 2 {
        return Err(domain("gr_star_k3", "k >= 2"));
    }
    gr_k3(k - 1)
}

/// Edges of the Turán graph `T_r(n)`.
pub fn turan_count(n: u64, r: u64) -> Result<BigUint, FormulaError> {
    if n == 0 || r == 0 {
        return Err(domain("turan_count", "n >= 1 and r >= 1"));
    }
    if r >= n {
        return Ok(choose2(n));
    }
    // (1 - 1/r) n^2 / 2 + (p - r) p / (2r), rearranged over the integers:
    // ((r - 1) n^2 - (r - p) p) / (2r)
    let p = n % r;
    let num = big(r - 1) * big(n) * big(n) - big(r - p) * big(p);
    Ok(num / (2 * r))
}

/// Turán number of the star `K_{1,h}`: `⌊(h-1)n/2⌋`.
pub fn ex_star(n: u64, h: u64) -> Result<BigUint, FormulaError> {
    if n == 0 || h == 0 {
        return Err(domain("ex_star", "n >= 1 and h >= 1"));
    }
    Ok(big(h - 1) * big(n) / 2u32)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityBounds {
    #[serde(serialize_with = "ser_big")]
    pub upper: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub lower: BigUint,
}

/// The blow-up decomposition `n = 5^{⌊(k-1)/2⌋}·m + r` used by the multiplicity
/// construction. Returns `(base, m, r)`.
pub fn multiplicity_split(k: u64, n: u64) -> Option<(u64, u64, u64)> {
    let base = pow(5, (k - 1) / 2).to_u64()?;
    Some((base, n / base, n % base))
}

/// Upper and lower bounds on the minimum number of monochromatic triangles
/// over Gallai-`k`-colorings of `K_n`, for `n >= GR_k(K_3)`.
pub fn g_multiplicity_bounds(k: u64, n: u64) -> Result<MultiplicityBounds, FormulaError> {
    let gr = gr_k3(k)?;
    if big(n) < gr {
        return Err(domain("g_multiplicity_bounds", format!("n >= GR_k(K_3) = {gr}")));
    }
    let (base, m, r) = multiplicity_split(k, n).expect("base <= n fits in u64");
    let (bm, br, bb) = (big(m), big(r), big(base));
    let upper = if k % 2 == 1 {
        &br * choose3(&(&bm + 1u32)) + (&bb - &br) * choose3(&bm)
    } else {
        &br * goodman_m2(m + 1) + (&bb - &br) * goodman_m2(m)
    };
    let s0 = if k % 2 == 1 { 1u32 } else { 2u32 };
    let num = big(n) * big(n - 1) * big(n - 2) * s0;
    let den = &gr * (&gr - 1u32) * (&gr - 2u32);
    let lower = (&num + &den - 1u32) / &den;
    Ok(MultiplicityBounds { upper, lower })
}

/// Convenience for code that needs a formula value as a size.
pub fn to_usize(v: &BigUint) -> Option<usize> {
    v.to_usize()
}
