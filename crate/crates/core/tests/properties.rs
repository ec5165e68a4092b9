//! Randomized property tests: structural invariants that should hold for
//! every connected multigraph in the supported range and every small integer
//! matrix, not just the curated fixtures.

mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use common::*;
use gparking::graph::{RootedMultigraph, VertexSubset};
use gparking::ideal::{check_monotone_family, monomize, MonomialIdeal, MonotoneCheck};
use gparking::involution::{chain_term, SubsetChain};
use gparking::parking::{standard_monomials, ExponentVector};
use gparking::rank::{exact_rank, modular_rank, IntMatrix, DEFAULT_MODULUS};

fn arb_graph() -> impl Strategy<Value = RootedMultigraph> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let pair_count = pair_list(n).len();
            (Just(n), prop::collection::vec(0u32..=2, pair_count))
        })
        .prop_filter_map("graph must be connected", |(n, mults)| {
            graph_from_mults(n, &mults)
        })
}

fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
        .prop_map(|rows| IntMatrix::from_rows(&rows))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parking_sets_are_down_closed(g in arb_graph(), k in 0i64..=1) {
        let basis = standard_monomials(&monomize(&g, k).unwrap()).unwrap();
        let set: std::collections::BTreeSet<&ExponentVector> = basis.iter().collect();
        for v in &basis {
            for i in 1..=g.n() {
                if v.exponent(i) > 0 {
                    let mut w = v.clone();
                    w.set_exponent(i, v.exponent(i) - 1);
                    prop_assert!(set.contains(&w), "{v} standard but {w} not");
                }
            }
        }
    }

    #[test]
    fn monomizations_are_monotone_families(g in arb_graph(), k in 0i64..=1) {
        let outcome = check_monotone_family(&monomize(&g, k).unwrap());
        prop_assert!(matches!(outcome, MonotoneCheck::Pass), "{outcome:?}");
    }

    #[test]
    fn exact_rank_matches_rational_reference(m in arb_matrix()) {
        prop_assert_eq!(exact_rank(&m), naive_rational_rank(&m));
    }

    // Entries are small enough that no minor can vanish modulo the default
    // prime, so the modular shortcut must agree exactly.
    #[test]
    fn modular_rank_matches_exact_on_small_matrices(m in arb_matrix()) {
        prop_assert_eq!(modular_rank(&m, DEFAULT_MODULUS), exact_rank(&m));
    }

    #[test]
    fn activity_profile_is_order_invariant(g in arb_graph(), seed in any::<u64>()) {
        let canonical = g.edge_instances().unwrap();
        let base = g.activity_profile(&canonical).unwrap();
        let mut order = canonical;
        order.shuffle(&mut StdRng::seed_from_u64(seed));
        prop_assert_eq!(g.activity_profile(&order).unwrap(), base);
    }

    #[test]
    fn exit_degrees_shrink_as_subsets_grow(g in arb_graph()) {
        let n = g.n();
        for big in VertexSubset::nonempty_subsets(n) {
            for small in VertexSubset::nonempty_subsets(n).filter(|s| s.is_subset_of(big)) {
                for i in small.iter() {
                    prop_assert!(
                        g.exit_degree(big, i).unwrap() <= g.exit_degree(small, i).unwrap(),
                        "d_{big}({i}) > d_{small}({i})"
                    );
                }
            }
        }
    }

    #[test]
    fn functional_subgraph_count_is_the_degree_product(g in arb_graph()) {
        let product: u64 = (1..=g.n()).map(|v| g.out_degree(v) as u64 + 1).product();
        prop_assert_eq!(g.enumerate_functional_subgraphs().len() as u64, product);
        prop_assert_eq!(chain_term(&g, &SubsetChain::empty()), product);
    }

    #[test]
    fn minimal_generators_idempotent_and_order_free(
        g in arb_graph(),
        k in 0i64..=1,
        seed in any::<u64>(),
    ) {
        let ideal = monomize(&g, k).unwrap();
        let minimal = ideal.minimal_generators();
        let key = |gens: &[gparking::MonomialGenerator]| -> Vec<Vec<u32>> {
            gens.iter().map(|m| m.exponents.as_slice().to_vec()).collect()
        };
        let again = MonomialIdeal::new(g.n(), k, minimal.clone()).minimal_generators();
        prop_assert_eq!(key(&minimal), key(&again));
        let mut shuffled = ideal.generators().to_vec();
        shuffled.shuffle(&mut StdRng::seed_from_u64(seed));
        let from_shuffled = MonomialIdeal::new(g.n(), k, shuffled).minimal_generators();
        prop_assert_eq!(key(&minimal), key(&from_shuffled));
    }
}
