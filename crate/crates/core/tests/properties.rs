//! Structural invariants checked on random inputs.

mod common;

use matchext::extend::{is_k_extendable, is_nk_extendable};
use matchext::graph::io::{from_graph6, to_graph6};
use matchext::harness::{run_ensemble, EnsembleConfig};
use matchext::lab::{
    binding_bound_ledger, claim_bounds, contra_ratio, sharpness_construction, threshold_n,
    toughness_certificate_bound,
};
use matchext::matching::{enumerate_k_matchings, perfect_matching_containing_avoiding};
use matchext::params::{binding_number, toughness};
use matchext::structure::barrier_certificate;
use matchext::{Graph, Matching, Rational, VertexSet};
use proptest::prelude::*;

fn random(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0u32..=100, any::<u64>()).prop_map(|(n, p, seed)| common::random_graph(n, p, seed))
}

fn subset(n: usize) -> impl Strategy<Value = VertexSet> {
    any::<u64>().prop_map(move |m| VertexSet::from_mask(if n == 64 { m } else { m & ((1 << n) - 1) }))
}

/// A rational strictly inside `(0, 1)`.
fn eps_fraction() -> impl Strategy<Value = Rational> {
    (2i64..=60).prop_flat_map(|q| (1..q).prop_map(move |p| Rational::new(p, q)))
}

proptest! {
    #[test]
    fn graph6_round_trip(n in 0usize..=62, p in 0u32..=100, seed in any::<u64>()) {
        let g = common::random_graph(n, p, seed);
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn neighborhood_is_monotone((g, a, b) in random(12).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), subset(n), subset(n))
    })) {
        let t = a.union(&b);
        prop_assert!(g.neighborhood(&a).unwrap().is_subset(&g.neighborhood(&t).unwrap()));
    }

    #[test]
    fn odd_components_bounded_by_components((g, s) in random(12).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), subset(n))
    })) {
        let comps = g.components_avoiding(&s);
        let odd = g.odd_component_count(&s).unwrap();
        prop_assert!(comps.len() >= odd);
        prop_assert_eq!(odd, comps.iter().filter(|c| c.len() % 2 == 1).count());
        let rest = g.order() - s.len();
        prop_assert_eq!(rest % 2, odd % 2);
        prop_assert_eq!(comps.iter().map(VertexSet::len).sum::<usize>(), rest);
    }

    #[test]
    fn connectivity_at_most_min_degree(g in random(14)) {
        prop_assume!(g.order() >= 2);
        prop_assert!(g.vertex_connectivity() <= g.min_degree());
    }

    #[test]
    fn enumeration_matches_oracle_in_order(g in random(9), k in 0usize..=4) {
        let got: Vec<Vec<(usize, usize)>> = enumerate_k_matchings(&g, k)
            .map(|m| m.unwrap().edges().to_vec())
            .collect();
        prop_assert_eq!(got, common::k_matchings(g.order(), &common::edges(&g), k));
    }

    #[test]
    fn constrained_perfect_matching_is_complete(
        g in random(10),
        pick in any::<u64>(),
        avoid in any::<u64>(),
    ) {
        let es = common::edges(&g);
        prop_assume!(!es.is_empty());
        let matchings = common::k_matchings(g.order(), &es, 1 + (pick % 2) as usize);
        prop_assume!(!matchings.is_empty());
        let required = &matchings[(pick >> 8) as usize % matchings.len()];
        let forbidden: Vec<_> = es
            .iter()
            .enumerate()
            .filter(|(i, e)| avoid >> (i % 64) & 1 == 1 && !required.contains(e))
            .map(|(_, &e)| e)
            .take(3)
            .collect();
        let m = Matching::new(&g, required.iter().copied()).unwrap();
        let found = perfect_matching_containing_avoiding(&g, &m, &forbidden).unwrap();
        prop_assert_eq!(found.is_some(), common::pm_with(g.order(), &es, required, &forbidden));
        if let Some(f) = found {
            prop_assert!(f.is_perfect(&g));
            prop_assert!(required.iter().all(|&(u, v)| f.contains_edge(u, v)));
            prop_assert!(forbidden.iter().all(|&(u, v)| !f.contains_edge(u, v)));
        }
    }

    #[test]
    fn threshold_non_increasing_in_eps(k in 1usize..=3, g in 3usize..=8, x in eps_fraction(), y in eps_fraction()) {
        let g0 = 2 * (g / 2) + 1;
        let cap = Rational::new(1, g0 as i64);
        let (a, b) = (x.min(y) * cap, x.max(y) * cap);
        prop_assert!(threshold_n(k, g0, a).unwrap() >= threshold_n(k, g0, b).unwrap());
    }

    #[test]
    fn threshold_bounds_every_grid_ratio(k in 1usize..=2, g in 3usize..=6, e in 2i64..=12) {
        let g0 = 2 * (g / 2) + 1;
        let eps = Rational::new(1, g0 as i64 * e);
        let bounds = claim_bounds(k, g0, eps).unwrap();
        let tau = Rational::new(g0 as i64 + 1, g0 as i64) + eps;
        let n = bounds.threshold;
        let s_hi = bounds.s_max.floor().unwrap() as usize;
        let l_hi = bounds.l_max.floor().unwrap() as usize;
        for order in [n, n + 1, 10 * n] {
            for s in 0..=s_hi {
                for l in 0..=l_hi {
                    let r = contra_ratio(order, k, g0, s, l);
                    prop_assert!(r.is_some_and(|r| r <= tau));
                }
            }
        }
        if n > 0 {
            let below = (0..=s_hi).any(|s| (0..=l_hi).any(|l| {
                contra_ratio(n - 1, k, g0, s, l).is_none_or(|r| r > tau)
            }));
            prop_assert!(below);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    /// `(n,k)`-extendable with `n ≥ 1`, `k ≥ 2` implies `(n+2, k−2)`-extendable.
    #[test]
    fn nk_reduction(n in 6usize..=10, p in 55u32..=100, seed in any::<u64>(), r in 1usize..=2, k in 2usize..=3) {
        let g = common::random_graph(n, p, seed);
        prop_assume!(g.is_connected() && n % 2 == r % 2 && n >= r + 2 * k + 2);
        if is_nk_extendable(&g, r, k).unwrap().holds {
            prop_assert!(is_nk_extendable(&g, r + 2, k - 2).unwrap().holds);
        }
    }

    /// A `k`-extendable graph stays `(k−1)`-extendable after deleting any edge.
    #[test]
    fn edge_deletion_reduction(h in 2usize..=5, p in 50u32..=100, seed in any::<u64>(), k in 1usize..=3) {
        let g = common::random_graph(2 * h, p, seed);
        prop_assume!(g.is_connected() && g.order() >= 2 * k + 2);
        if is_k_extendable(&g, k).unwrap().holds {
            for &e in g.edges() {
                let minus = g.remove_edges(&[e]);
                prop_assert!(is_k_extendable(&minus, k - 1).unwrap().holds, "{:?} minus {:?}", g, e);
            }
        }
    }

    /// Every certificate of non-extendability bounds the binding number.
    #[test]
    fn ledger_bounds_binding_number(h in 2usize..=5, p in 30u32..=100, seed in any::<u64>(), k in 1usize..=2) {
        let g = common::random_graph(2 * h, p, seed);
        prop_assume!(g.is_connected() && g.order() >= 2 * k + 2);
        let es = common::edges(&g);
        for m in common::k_matchings(g.order(), &es, k) {
            let matching = Matching::new(&g, m.iter().copied()).unwrap();
            let (rest, map) = g.remove_vertices(&matching.vertices());
            let Some(barrier) = barrier_certificate(&rest).unwrap() else { continue };
            let s: VertexSet = barrier.s.iter().map(|v| map[v]).collect();
            let ledger = binding_bound_ledger(&g, k, &matching, &s).unwrap();
            let b = common::binding_number(g.order(), &es).unwrap().0;
            prop_assert!(b <= ledger.bound(), "b = {} > min(f, h) = {}", b, ledger.bound());
            // f > 1 is exactly the first claim; it can fail without the binding hypothesis
            prop_assert_eq!(ledger.f > Rational::one(), 2 * k + ledger.s + 2 > ledger.r);
            prop_assert!(ledger.h > Rational::one());
            prop_assert!(ledger.q >= 2 && ledger.q.is_multiple_of(2));
        }
    }

    /// `t(G) ≤ (|S|+|T|)/(|T|+2)` for a deletion set `S` and a Tutte set `T` of `G − S`.
    #[test]
    fn toughness_certificate_bound_holds(n in 4usize..=9, p in 20u32..=90, seed in any::<u64>(), r in 0usize..=3) {
        let g = common::random_graph(n, p, seed);
        prop_assume!(g.is_connected() && n >= r && n % 2 == r % 2);
        for s in common::subsets_of_size(n, r) {
            let s = VertexSet::new(s);
            let (rest, map) = g.remove_vertices(&s);
            let Some(barrier) = barrier_certificate(&rest).unwrap() else { continue };
            let t: VertexSet = barrier.s.iter().map(|v| map[v]).collect();
            let b = toughness_certificate_bound(&g, r, &s, &t, &Default::default()).unwrap();
            prop_assert!(b.toughness_within && b.kappa_within);
            prop_assert_eq!(b.toughness, common::toughness(n, &common::edges(&g)).0);
        }
    }
}

#[test]
fn cycle_connectivity_is_two() {
    for n in 3..=20 {
        assert_eq!(Graph::cycle(n).unwrap().vertex_connectivity(), 2);
    }
}

#[test]
fn sharpness_small_grid_against_oracle() {
    for n in 1..=3 {
        for t in 1..=2 {
            for r in 1..=3 {
                let g = sharpness_construction(n, t, r).unwrap();
                let es = common::edges(&g);
                let order = g.order();
                assert_eq!(order, (n + t) + (t + 1) + r);
                let want = Rational::new((n + t) as i64, (t + 2) as i64);
                assert_eq!(common::toughness(order, &es).0, want);
                assert_eq!(toughness(&g).unwrap().value, want);
                assert_eq!(common::vertex_connectivity(order, &es), n + t);
                if order % 2 == n % 2 {
                    assert!(!common::is_n_factor_critical(order, &es, n));
                }
            }
        }
    }
}

#[test]
fn fixture_values_match_oracle() {
    let cases = [
        (Graph::cycle(5).unwrap(), Rational::new(4, 3)),
        (Graph::cycle(4).unwrap(), Rational::one()),
        (Graph::complete(4), Rational::integer(3)),
    ];
    for (g, want) in cases {
        assert_eq!(common::binding_number(g.order(), &common::edges(&g)).unwrap().0, want);
        assert_eq!(binding_number(&g).unwrap().value, want);
    }
    let c6 = Graph::cycle(6).unwrap();
    assert_eq!(common::toughness(6, &common::edges(&c6)).0, Rational::one());
}

#[test]
fn ensemble_is_reproducible() {
    let config = EnsembleConfig::from_json(
        r#"{
            "model": "gnp",
            "orders": {"min": 6, "max": 9},
            "probability": {"min": "1/3", "max": "9/10", "steps": 4},
            "samples": 40,
            "seed": 11,
            "checks": [
                {"suite": "woodall"},
                {"theorem": "3.2", "params": [{"k": 1}], "eps": ["1/2"]}
            ]
        }"#,
    )
    .unwrap();
    let a = run_ensemble(&config).unwrap().to_json();
    let b = run_ensemble(&config).unwrap().to_json();
    assert_eq!(a, b);
    assert!(a.contains("\"schema\": 1"));
}
