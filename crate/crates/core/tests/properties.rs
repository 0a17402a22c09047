mod common;

use num_bigint::BigUint;
use proptest::prelude::*;

use clawfree::cycle_space::enumerate_cycle_space;
use clawfree::expansion::{certify, Expander};
use clawfree::oracle::{
    count_perfect_matchings, enumerate_perfect_matchings, enumerate_two_factors,
};
use clawfree::predicates::{bridges, components, find_claw, is_cubic, is_two_edge_connected};
use clawfree::structure::{build, classify, described_edges, Decomposition};
use clawfree::{generators, Multigraph};

fn arb_multigraph() -> impl Strategy<Value = Multigraph> {
    (0usize..9).prop_flat_map(|n| {
        let n = n.max(1);
        prop::collection::vec((0..n, 0..n), 0..16)
            .prop_map(move |edges| Multigraph::from_edges(n, &edges))
    })
}

fn arb_instance(max_total: usize) -> impl Strategy<Value = (Multigraph, Vec<usize>)> {
    (prop::sample::select(vec![2usize, 4, 6, 8]), any::<u64>())
        .prop_map(move |(k, seed)| common::seeded_instance(k, max_total, seed))
}

fn bridges_by_removal(g: &Multigraph) -> Vec<usize> {
    let base = components(g).1;
    (0..g.edge_count())
        .filter(|&e| components(&g.without_edge(e)).1 > base)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lowpoint_bridges_match_removal_oracle(g in arb_multigraph()) {
        prop_assert_eq!(bridges(&g).to_vec(), bridges_by_removal(&g));
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_multigraph()) {
        let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn bridgeless_cubic_multigraphs_have_no_loops(g in arb_multigraph()) {
        if is_cubic(&g) && is_two_edge_connected(&g) {
            prop_assert!(!g.has_loops());
        }
    }

    #[test]
    fn build_then_classify((h, lengths) in arb_instance(5)) {
        let (g, built) = build(&h, &lengths).unwrap();
        prop_assert!(g.is_simple());
        prop_assert!(is_cubic(&g));
        prop_assert_eq!(find_claw(&g).unwrap(), None);
        prop_assert!(is_two_edge_connected(&g));
        let total: usize = lengths.iter().sum();
        prop_assert_eq!(g.vertex_count(), 3 * h.vertex_count() + 4 * total);

        let d = classify(&g).unwrap();
        prop_assert_eq!(&d, &built);
        let Decomposition::Expanded(x) = &d else { unreachable!() };
        prop_assert_eq!(x.diamond_count(), (g.vertex_count() - 3 * x.k()) / 4);
        let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        prop_assert_eq!(described_edges(&d, &g), edges);
    }

    #[test]
    fn expansions_are_2_factors((h, lengths) in arb_instance(4)) {
        let (g, d) = build(&h, &lengths).unwrap();
        let ex = Expander::from_decomposition(&g, &d).unwrap();
        for c in enumerate_cycle_space(&ex.expansion().base, 1 << 12).unwrap() {
            let len = ex.routing_len(&c);
            for mask in 0u32..1 << len {
                let r: Vec<bool> = (0..len).map(|i| mask >> i & 1 == 1).collect();
                let f = ex.expand(&c, &r).unwrap();
                for v in 0..g.vertex_count() {
                    prop_assert_eq!(g.degree_in(&f, v), 2);
                }
            }
        }
    }

    #[test]
    fn certificate_is_contained_in_oracle((h, lengths) in arb_instance(4)) {
        let (g, _) = build(&h, &lengths).unwrap();
        prop_assume!(g.vertex_count() <= 28);
        let c = certify(&g).unwrap();
        prop_assert_eq!(c.generated, c.matchings.len());
        let all = enumerate_perfect_matchings(&g, 1 << 24).unwrap();
        prop_assert!(c.matchings.len() <= all.len());
        for m in &c.matchings {
            prop_assert!(all.binary_search(m).is_ok());
        }
    }
}

#[test]
fn diamond_free_expansion_is_a_bijection_onto_2_factors() {
    for k in [2, 4, 6] {
        for seed in 0..5 {
            let h = generators::random_base(k, seed).unwrap();
            let (g, d) = build(&h, &vec![0; h.edge_count()]).unwrap();
            assert!(g.vertex_count() <= 18);
            let ex = Expander::from_decomposition(&g, &d).unwrap();
            let members = enumerate_cycle_space(&ex.expansion().base, 1 << 12).unwrap();
            let mut images: Vec<_> = members.iter().map(|c| ex.expand(c, &[]).unwrap()).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), members.len());
            assert_eq!(images, enumerate_two_factors(&g, 1 << 20).unwrap());
        }
    }
}

#[test]
fn cycle_space_branch_is_exact_on_diamond_free_graphs() {
    for k in [2, 4, 6, 8] {
        for seed in 0..3 {
            let h = generators::random_base(k, seed).unwrap();
            let (g, _) = build(&h, &vec![0; h.edge_count()]).unwrap();
            let c = certify(&g).unwrap();
            assert_eq!(c.matchings.len(), 1 << (k / 2 + 1));
        }
    }
}

#[test]
fn oracle_is_self_consistent_and_petersen_holds() {
    for item in common::cubic_corpus() {
        let g = &item.graph;
        let count = count_perfect_matchings(g);
        let all = enumerate_perfect_matchings(g, 1 << 24).unwrap();
        assert_eq!(count, BigUint::from(all.len()), "{}", item.name);
        if is_two_edge_connected(g) {
            assert!(count >= BigUint::from(1u8), "{}", item.name);
        }
    }
}
