mod common;

use num_bigint::BigUint;

use gallai::construct::construct_f_lower;
use gallai::formulas::{goodman_m2, gr_k3, turan_count};
use gallai::search::{exists_avoiding, max_protected_edges, min_mono_triangles, SearchOptions, Target};
use gallai::{count_protected_edges, is_gallai, triangle_census};

fn unreduced() -> SearchOptions {
    SearchOptions {
        symmetry: false,
        ..SearchOptions::default()
    }
}

#[test]
fn symmetry_reduction_keeps_optima() {
    let reduced = SearchOptions::default();
    for n in 2..=5 {
        for k in 1..=3 {
            if k == 3 && n == 5 {
                continue;
            }
            for gallai in [false, true] {
                let a = min_mono_triangles(n, k, gallai, &reduced).unwrap();
                let b = min_mono_triangles(n, k, gallai, &unreduced()).unwrap();
                assert_eq!(a.value, b.value, "n = {n}, k = {k}, gallai = {gallai}");
                assert!(b.nodes_explored >= a.nodes_explored);
            }
            let a = max_protected_edges(n, k, &reduced).unwrap();
            let b = max_protected_edges(n, k, &unreduced()).unwrap();
            assert_eq!(a.value, b.value, "n = {n}, k = {k}");
        }
    }
    for n in 3..=5 {
        for targets in [[Target::K3, Target::K3], [Target::K4PlusE, Target::K3]] {
            let a = exists_avoiding(n, 2, &targets, false, &SearchOptions::default()).unwrap();
            let b = exists_avoiding(n, 2, &targets, false, &unreduced()).unwrap();
            assert_eq!(a.value, b.value);
        }
    }
}

#[test]
fn exhaustive_enumeration_agrees_at_five_vertices() {
    let (mut min_mono, mut max_protected) = (u64::MAX, 0);
    for c in common::all_colorings(5, 3) {
        min_mono = min_mono.min(common::census(&c).mono());
        max_protected = max_protected.max(common::protected_edges(&c));
    }
    let opts = SearchOptions::default();
    assert_eq!(min_mono_triangles(5, 3, false, &opts).unwrap().value, min_mono);
    assert_eq!(max_protected_edges(5, 3, &opts).unwrap().value, max_protected);
}

#[test]
fn goodman_values_and_witnesses() {
    for n in 3..=7 {
        let out = min_mono_triangles(n, 2, false, &SearchOptions::default()).unwrap();
        assert!(out.exhaustive);
        assert_eq!(BigUint::from(out.value), goodman_m2(n as u64));
        let w = out.witness.unwrap();
        assert_eq!(triangle_census(&w).mono_total(), out.value);
    }
}

#[test]
fn gallai_restriction_and_monotonicity() {
    let opts = SearchOptions::default();
    assert_eq!(min_mono_triangles(6, 3, true, &opts).unwrap().value, 0);
    assert_eq!(min_mono_triangles(6, 2, true, &opts).unwrap().value, 2);
    for k in 2..=3 {
        let mut prev = (0, 0);
        for n in 3..=6 {
            let free = min_mono_triangles(n, k, false, &opts).unwrap();
            let gallai = min_mono_triangles(n, k, true, &opts).unwrap();
            assert!(gallai.value >= free.value);
            assert!(free.value >= prev.0 && gallai.value >= prev.1);
            assert!(is_gallai(&gallai.witness.unwrap()));
            prev = (free.value, gallai.value);
        }
    }
}

#[test]
fn gallai_search_finds_pentagon_blow_up_at_ten() {
    let out = min_mono_triangles(10, 3, true, &SearchOptions::default()).unwrap();
    assert!(out.exhaustive);
    assert_eq!(out.value, 0);
}

#[test]
fn protected_edge_maxima() {
    let opts = SearchOptions::default();
    let six_two = common::all_colorings(6, 2).map(|c| common::protected_edges(&c)).max().unwrap();
    for (n, k, want) in [(4, 2, 6), (5, 2, 10), (6, 2, six_two), (6, 3, 15)] {
        let out = max_protected_edges(n, k, &opts).unwrap();
        assert!(out.exhaustive);
        assert_eq!(out.value, want, "n = {n}, k = {k}");
        assert_eq!(count_protected_edges(&out.witness.unwrap()), want);
        // lower bound t(n, GR_{k-1}(K_3) - 1) and trivial upper bound t(n, GR_k(K_3) - 1)
        let lo = turan_count(n as u64, u64::try_from(gr_k3(k as u64 - 1).unwrap()).unwrap() - 1).unwrap();
        let hi = turan_count(n as u64, u64::try_from(gr_k3(k as u64).unwrap()).unwrap() - 1).unwrap();
        assert!(lo <= BigUint::from(want) && BigUint::from(want) <= hi);
    }
    let c = construct_f_lower(6, 3).unwrap();
    assert!(count_protected_edges(&c) <= 15);
}

#[test]
fn avoidance_witnesses_avoid() {
    let out = exists_avoiding(8, 2, &[Target::K4PlusE, Target::K3], false, &SearchOptions::default()).unwrap();
    let w = out.witness.unwrap();
    assert!(!common::has_mono_k4_plus_e(&w, 1));
    assert!(!common::has_mono_triangle(&w, 2));
    let out = exists_avoiding(10, 3, &[Target::K3; 3], true, &SearchOptions::default()).unwrap();
    assert_eq!(out.value, 1);
    let out = exists_avoiding(11, 3, &[Target::K3; 3], true, &SearchOptions::default()).unwrap();
    assert!(out.exhaustive);
    assert_eq!(out.value, 0);
}
