//! One test per acceptance criterion. Each prints a `criterion N … pass`
//! line (visible with `cargo test -- --nocapture`) and pins its own time
//! budget where the criterion has one.

mod common;

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use common::*;
use gparking::graph::{Forest, RootedMultigraph, UndirectedEdge};
use gparking::ideal::{check_monotone_family, monomize, power_ideal, MonotoneCheck};
use gparking::involution::{
    alternating_sum, apply, chain_term, count_compatible_pairs, is_compatible, subset_chains,
};
use gparking::parking::{
    self, is_classical_parking, is_g_parking, orbit_count, standard_monomials, ExponentVector,
};
use gparking::rank::{self, exact_rank, IntMatrix};
use gparking::series::HilbertSeries;
use gparking::{export, CasDialect};

const SECOND: Duration = Duration::from_secs(1);
const FIVE_SECONDS: Duration = Duration::from_secs(5);
const SWEEP_BUDGET: Duration = Duration::from_secs(600);

#[test]
fn criterion_1_k3_k0_exact_basis() {
    let start = Instant::now();
    let g = RootedMultigraph::complete(3).unwrap();
    let ideal = power_ideal(&g, 0).unwrap();
    let exponents: Vec<u32> = ideal.generators().iter().map(|p| p.exponent).collect();
    assert_eq!(exponents, [2, 2, 2]);
    let basis = standard_monomials(&monomize(&g, 0).unwrap()).unwrap();
    assert_eq!(basis, vec![ev(&[0, 0]), ev(&[0, 1]), ev(&[1, 0])]);
    assert_eq!(basis.len(), 3);
    let elapsed = start.elapsed();
    assert!(elapsed < SECOND, "took {elapsed:?}");
    println!("criterion 1 (K3 k=0: exponents, basis, dim 3): pass in {elapsed:?}");
}

#[test]
fn criterion_2_k3_k1_series_from_both_routes() {
    let start = Instant::now();
    let g = RootedMultigraph::complete(3).unwrap();
    let by_monomials = parking::hilbert_series(&monomize(&g, 1).unwrap()).unwrap();
    let by_rank = rank::hilbert_series(&power_ideal(&g, 1).unwrap());
    assert_eq!(by_monomials.to_string(), "1 + 2t + 3t^2 + t^3");
    assert_eq!(by_rank.to_string(), "1 + 2t + 3t^2 + t^3");
    assert_eq!(by_monomials.dimension(), 7);
    assert_eq!(g.enumerate_forests().unwrap().len(), 7);
    assert_eq!(alternating_sum(&g).value, 7);
    let basis = standard_monomials(&monomize(&g, 1).unwrap()).unwrap();
    let has_xxy = basis.contains(&ev(&[2, 1]));
    let has_xyy = basis.contains(&ev(&[1, 2]));
    assert!(has_xxy ^ has_xyy, "exactly one of x^2y, xy^2 is standard");
    assert!(has_xyy, "the one with the smaller x1-degree survives");
    let elapsed = start.elapsed();
    assert!(elapsed < SECOND, "took {elapsed:?}");
    println!("criterion 2 (K3 k=1: series twice, dim=forests=altsum=7): pass in {elapsed:?}");
}

#[test]
fn criterion_3_example4_k1_verbatim() {
    let start = Instant::now();
    let g = load_graph("example4.graph");
    let ideal = power_ideal(&g, 1).unwrap();
    let exponents: Vec<u32> = ideal.generators().iter().map(|p| p.exponent).collect();
    assert_eq!(exponents, [3, 3, 5, 4, 4, 6, 6, 4, 6, 4, 6, 5, 5, 5, 5]);

    let monomial = monomize(&g, 1).unwrap();
    let vectors: Vec<&[u32]> = monomial
        .generators()
        .iter()
        .map(|m| m.exponents.as_slice())
        .collect();
    let expected: Vec<&[u32]> = vec![
        &[3, 0, 0, 0], // {1}
        &[0, 3, 0, 0], // {2}
        &[3, 2, 0, 0], // {1,2}
        &[0, 0, 4, 0], // {3}
        &[2, 0, 2, 0], // {1,3}
        &[0, 3, 3, 0], // {2,3}
        &[2, 2, 2, 0], // {1,2,3}
        &[0, 0, 0, 4], // {4}
        &[3, 0, 0, 3], // {1,4}
        &[0, 2, 0, 2], // {2,4}
        &[3, 1, 0, 2], // {1,2,4}
        &[0, 0, 3, 2], // {3,4}
        &[2, 0, 1, 2], // {1,3,4}
        &[0, 2, 2, 1], // {2,3,4}
        &[2, 1, 1, 1], // {1,2,3,4}
    ];
    assert_eq!(vectors, expected);
    assert_eq!(monomial.minimal_generators().len(), 10);

    let series = parking::hilbert_series(&monomial).unwrap();
    assert_eq!(series.dimension(), 82);
    assert_eq!(g.enumerate_forests().unwrap().len(), 82);
    assert_eq!(alternating_sum(&g).value, 82);
    let elapsed = start.elapsed();
    assert!(elapsed < FIVE_SECONDS, "took {elapsed:?}");
    println!("criterion 3 (example4 k=1: 15 exponents, 15 monomials, 10 minimal, 82): pass in {elapsed:?}");
}

#[test]
fn criterion_4_k5_k1_irredundant_and_golden_exports() {
    let start = Instant::now();
    let g = RootedMultigraph::complete(5).unwrap();
    let power = power_ideal(&g, 1).unwrap();
    let monomial = monomize(&g, 1).unwrap();
    assert_eq!(monomial.generators().len(), 15);
    assert_eq!(
        monomial.minimal_generators().len(),
        15,
        "all 15 are irredundant"
    );

    for (script, file) in [
        (
            export::power_ideal_script(&power, CasDialect::Macaulay2),
            "k5_power_k1.m2",
        ),
        (
            export::power_ideal_script(&power, CasDialect::Singular),
            "k5_power_k1.sing",
        ),
        (
            export::monomial_ideal_script(&monomial, CasDialect::Macaulay2),
            "k5_monomial_k1.m2",
        ),
        (
            export::monomial_ideal_script(&monomial, CasDialect::Singular),
            "k5_monomial_k1.sing",
        ),
    ] {
        assert_eq!(script, golden(file), "golden mismatch for {file}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < FIVE_SECONDS, "took {elapsed:?}");
    println!("criterion 4 (K5 k=1: 15 irredundant generators, byte-identical exports): pass in {elapsed:?}");
}

#[test]
fn criterion_5_theorem_sweep() {
    let start = Instant::now();
    let graphs = sweep_graphs();
    assert_eq!(graphs.len(), 202);
    for (name, g) in &graphs {
        for k in [0, 1] {
            let by_monomials = parking::hilbert_series(&monomize(g, k).unwrap()).unwrap();
            let by_rank = rank::hilbert_series(&power_ideal(g, k).unwrap());
            assert_eq!(by_rank, by_monomials, "{name} k={k}");
            if k == 1 {
                let forests = g.enumerate_forests().unwrap().len();
                assert_eq!(by_monomials.dimension(), forests as u64, "{name}");
                assert_eq!(alternating_sum(g).value, forests as i64, "{name}");
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < SWEEP_BUDGET, "took {elapsed:?}");
    println!("criterion 5 (sweep of 202 graphs, both k: series equal; k=1 dim=forests=altsum): pass in {elapsed:?}");
}

#[test]
fn criterion_6_involution_suite() {
    let start = Instant::now();
    let graphs = sweep_graphs();
    for (name, g) in &graphs {
        let chains = subset_chains(g.n());
        for chain in &chains {
            assert_eq!(
                count_compatible_pairs(g, chain),
                chain_term(g, chain),
                "{name} {chain}"
            );
        }
        let subgraphs = g.enumerate_functional_subgraphs();
        let mut fixed = 0u64;
        for chain in &chains {
            for h in subgraphs.iter().filter(|h| is_compatible(h, chain)) {
                let image = apply(h, chain).unwrap();
                if image == *chain {
                    fixed += 1;
                    assert!(chain.is_empty(), "{name}: fixed point with nonempty chain");
                    let edges: Vec<UndirectedEdge> = (1..=g.n())
                        .filter_map(|v| {
                            h.out_edge(v)
                                .map(|(t, inst)| UndirectedEdge::new(v, t, inst))
                        })
                        .collect();
                    let forest = Forest::from_edges(g, edges)
                        .unwrap_or_else(|e| panic!("{name}: fixed point not a forest: {e}"));
                    assert_eq!(
                        &g.canonical_orientation(&forest),
                        h,
                        "{name}: fixed point not canonically oriented"
                    );
                } else {
                    assert_eq!(
                        (image.len() as i64 - chain.len() as i64).abs(),
                        1,
                        "{name}: image length must differ by one"
                    );
                    assert_eq!(
                        apply(h, &image).unwrap(),
                        *chain,
                        "{name}: not an involution"
                    );
                }
            }
        }
        assert_eq!(
            fixed,
            g.enumerate_forests().unwrap().len() as u64,
            "{name}: fixed points vs forests"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < SWEEP_BUDGET, "took {elapsed:?}");
    println!("criterion 6 (involution suite on every sweep graph): pass in {elapsed:?}");
}

#[test]
fn criterion_7_external_activity_profiles() {
    let start = Instant::now();
    for (name, g) in [
        ("k3", RootedMultigraph::complete(3).unwrap()),
        ("example4", load_graph("example4.graph")),
    ] {
        let series = parking::hilbert_series(&monomize(&g, 1).unwrap()).unwrap();
        let canonical = g.edge_instances().unwrap();
        for seed in 0..3u64 {
            let mut order = canonical.clone();
            order.shuffle(&mut StdRng::seed_from_u64(seed));
            let profile = HilbertSeries::from_coeffs(g.activity_profile(&order).unwrap());
            assert_eq!(profile, series, "{name} seed {seed}");
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 7 (activity profile = series, 3 random orders each): pass in {elapsed:?}");
}

#[test]
fn criterion_8_complete_graphs_classical_and_catalan() {
    let start = Instant::now();
    let catalan = [1usize, 2, 5, 14];
    for n in 1usize..=4 {
        let g = RootedMultigraph::complete(n + 1).unwrap();
        let basis = standard_monomials(&monomize(&g, 0).unwrap()).unwrap();
        assert_eq!(
            basis.len(),
            (n + 1).pow(n as u32 - 1),
            "K{} k=0 count",
            n + 1
        );
        assert_eq!(orbit_count(&basis), catalan[n - 1], "K{} orbits", n + 1);

        // The graph predicate agrees with the classical one on the whole
        // box 0..=n per coordinate (one above the largest feasible value).
        let mut a = vec![0u32; n];
        loop {
            let v = ExponentVector::new(a.clone());
            assert_eq!(
                is_g_parking(&g, &v, 0),
                is_classical_parking(&v),
                "disagreement at {v}"
            );
            let mut i = 0;
            while i < n {
                a[i] += 1;
                if a[i] <= n as u32 {
                    break;
                }
                a[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 8 (K_(n+1) k=0: classical, (n+1)^(n-1), Catalan orbits): pass in {elapsed:?}"
    );
}

#[test]
fn criterion_9_property_checks() {
    let start = Instant::now();

    // Exact rank vs an independent rational-elimination reference.
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..30 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let m = IntMatrix::from_rows(&data);
        assert_eq!(exact_rank(&m), naive_rational_rank(&m), "matrix {data:?}");
    }

    // Down-closure and the monotone-family conditions across the sweep.
    for (name, g) in sweep_graphs().iter().step_by(10) {
        for k in [0, 1] {
            let ideal = monomize(g, k).unwrap();
            assert!(
                matches!(check_monotone_family(&ideal), MonotoneCheck::Pass),
                "{name} k={k}"
            );
            let basis = standard_monomials(&ideal).unwrap();
            let set: std::collections::BTreeSet<&ExponentVector> = basis.iter().collect();
            for v in &basis {
                for i in 1..=g.n() {
                    if v.exponent(i) > 0 {
                        let mut w = v.clone();
                        w.set_exponent(i, v.exponent(i) - 1);
                        assert!(set.contains(&w), "{name} k={k}: {v} standard, {w} not");
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 9 (rank reference, down-closure, monotone family; see also tests/properties.rs): pass in {elapsed:?}");
}
