//! The cross-check suite behind `verify`: every invariant that ties the
//! combinatorial, linear-algebra, and involution routes together, evaluated
//! on one graph and reported check by check.

use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::graph::{RootedMultigraph, VertexSubset};
use crate::ideal::{check_monotone_family, monomize, power_ideal, MonotoneCheck};
use crate::involution::{
    self, alternating_sum, chain_term, count_compatible_pairs, is_compatible, label_special,
    subset_chains,
};
use crate::parking::{self, ExponentVector};
use crate::rank;
use crate::series::HilbertSeries;

/// Outcome of a single named check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed: false,
            detail: detail.into(),
        }
    }

    fn from(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed,
            detail: detail.into(),
        }
    }
}

/// Exhaustive pair enumeration is skipped above this many (subgraph, chain)
/// combinations; the cheaper aggregate identities still run.
const PAIR_BUDGET: u128 = 4_000_000;

/// Runs every applicable cross-check for the graph at the given `k`.
/// Forest, alternating-sum, involution, and activity checks apply only to
/// undirected graphs with `k = 1`; the classical-parking comparison applies
/// only to complete graphs with `k = 0`.
pub fn run_checks(g: &RootedMultigraph, k: i64, threads: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let n = g.n();
    let expected = (1usize << n) - 1;

    let power = power_ideal(g, k);
    let monomial = monomize(g, k);

    match (&power, &monomial) {
        (Ok(p), Ok(m)) => {
            let ok = p.generators().len() == expected && m.generators().len() == expected;
            checks.push(Check::from(
                "generator-count",
                ok,
                format!(
                    "power {} and monomial {} generators; expected {expected}",
                    p.generators().len(),
                    m.generators().len()
                ),
            ));
        }
        (Err(e), _) | (_, Err(e)) => {
            checks.push(Check::fail("generator-count", e.to_string()));
        }
    }

    if let (Ok(p), Ok(m)) = (&power, &monomial) {
        // Both equal the total exit degree of the subset plus k.
        let bad = p
            .generators()
            .iter()
            .zip(m.generators())
            .find(|(pg, mg)| pg.support != mg.support || mg.exponents.degree() != pg.exponent);
        checks.push(match bad {
            None => Check::pass(
                "monomial-degrees",
                "deg(m_I) equals the power exponent for every subset",
            ),
            Some((pg, mg)) => Check::fail(
                "monomial-degrees",
                format!(
                    "subset {}: monomial degree {} vs exponent {}",
                    pg.support,
                    mg.exponents.degree(),
                    pg.exponent
                ),
            ),
        });
    }

    if let Ok(m) = &monomial {
        checks.push(match check_monotone_family(m) {
            MonotoneCheck::Pass => Check::pass("monotone-family", "both conditions hold"),
            violation => Check::fail("monotone-family", format!("{violation:?}")),
        });
    }

    let series_b = monomial
        .as_ref()
        .ok()
        .map(parking::hilbert_series)
        .and_then(Result::ok);
    let series_a = power
        .as_ref()
        .ok()
        .map(|p| rank::hilbert_series_threaded(p, threads));

    match (&series_a, &series_b) {
        (Some(a), Some(b)) => {
            checks.push(Check::from(
                "hilbert-agreement",
                a == b,
                format!("rank route {a}; monomial route {b}"),
            ));
        }
        _ => checks.push(Check::fail(
            "hilbert-agreement",
            "one of the series could not be computed",
        )),
    }

    if let Some(a) = &series_a {
        if let Ok(p) = &power {
            let mut bad = None;
            for d in 0..=(a.degree().unwrap_or(0) + 1) {
                let piece = rank::graded_piece(p, d as u32);
                let exact = rank::exact_rank(&piece.matrix);
                let modular = rank::modular_rank(&piece.matrix, rank::DEFAULT_MODULUS);
                if exact != modular {
                    bad = Some((d, exact, modular));
                    break;
                }
            }
            checks.push(match bad {
                None => Check::pass("modular-rank", "modular ranks match exact ranks"),
                Some((d, e, m)) => Check::fail(
                    "modular-rank",
                    format!("degree {d}: exact {e} vs modular {m}"),
                ),
            });
        }
    }

    if let Ok(m) = &monomial {
        if let Ok(basis) = parking::standard_monomials(m) {
            let set: std::collections::BTreeSet<&ExponentVector> = basis.iter().collect();

            // Two predicates, one truth: box membership vs the subset test.
            let bounds: Vec<u32> = (1..=n)
                .map(|i| crate::ideal::monomial_exponent(g, VertexSubset::singleton(i), i, k) + 1)
                .collect();
            let mut a = vec![0u32; n];
            let mut equiv_bad: Option<ExponentVector> = None;
            loop {
                let v = ExponentVector::new(a.clone());
                if set.contains(&v) != parking::is_g_parking(g, &v, k) {
                    equiv_bad = Some(v);
                    break;
                }
                let mut i = 0;
                while i < n {
                    a[i] += 1;
                    if a[i] < bounds[i] {
                        break;
                    }
                    a[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
            checks.push(match equiv_bad {
                None => Check::pass(
                    "parking-equivalence",
                    format!("predicates agree on {} vectors", basis.len()),
                ),
                Some(v) => Check::fail("parking-equivalence", format!("disagreement at {v}")),
            });

            // Decreasing any coordinate of a standard monomial stays standard.
            let mut closure_bad = None;
            'outer: for v in &basis {
                for i in 1..=n {
                    if v.exponent(i) > 0 {
                        let mut w = v.clone();
                        w.set_exponent(i, v.exponent(i) - 1);
                        if !set.contains(&w) {
                            closure_bad = Some((v.clone(), w));
                            break 'outer;
                        }
                    }
                }
            }
            checks.push(match closure_bad {
                None => Check::pass("down-closure", "standard monomials form an order ideal"),
                Some((v, w)) => {
                    Check::fail("down-closure", format!("{v} is standard but {w} is not"))
                }
            });
        }

        // Reducing twice changes nothing, and reduction ignores input order.
        let minimal = m.minimal_generators();
        let again = crate::ideal::MonomialIdeal::new(n, k, minimal.clone()).minimal_generators();
        let mut shuffled = m.generators().to_vec();
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        shuffled.shuffle(&mut rng);
        let from_shuffled = crate::ideal::MonomialIdeal::new(n, k, shuffled).minimal_generators();
        let same_monomials = |a: &[crate::ideal::MonomialGenerator],
                              b: &[crate::ideal::MonomialGenerator]| {
            a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.exponents == y.exponents)
        };
        checks.push(Check::from(
            "minimal-idempotence",
            same_monomials(&minimal, &again) && same_monomials(&minimal, &from_shuffled),
            format!("{} minimal generators", minimal.len()),
        ));
    }

    if g.is_undirected() && k == 1 {
        let forests = g.enumerate_forests().unwrap();
        let dim_b = series_b.as_ref().map(HilbertSeries::dimension);
        checks.push(match dim_b {
            Some(dim) => Check::from(
                "forest-count",
                forests.len() as u64 == dim,
                format!("{} forests vs dimension {dim}", forests.len()),
            ),
            None => Check::fail("forest-count", "no monomial-route dimension available"),
        });

        let report = alternating_sum(g);
        checks.push(Check::from(
            "alternating-sum",
            report.value == forests.len() as i64,
            format!(
                "sum {} over {} chains ({} nonzero) vs {} forests",
                report.value,
                report.chain_count,
                report.nonzero_chains,
                forests.len()
            ),
        ));

        let subgraph_count: u128 = (1..=n).map(|v| g.out_degree(v) as u128 + 1).product();
        let chains = subset_chains(n);
        if subgraph_count * chains.len() as u128 <= PAIR_BUDGET {
            let mut bad_term = None;
            for chain in &chains {
                if count_compatible_pairs(g, chain) != chain_term(g, chain) {
                    bad_term = Some(chain.clone());
                    break;
                }
            }
            checks.push(match bad_term {
                None => Check::pass(
                    "chain-terms",
                    format!("products match pair counts on {} chains", chains.len()),
                ),
                Some(c) => Check::fail("chain-terms", format!("mismatch at chain {c}")),
            });

            checks.push(involution_check(g, &chains, &forests));
        } else {
            checks.push(Check::pass(
                "chain-terms",
                "skipped: pair space exceeds the exhaustive budget",
            ));
        }

        // External activity: the degree profile matches the Hilbert series
        // for the canonical edge order and three seeded shuffles.
        if let Some(b) = &series_b {
            let canonical = g.edge_instances().unwrap();
            let mut orders = vec![canonical.clone()];
            for seed in 0..3u64 {
                let mut order = canonical.clone();
                let mut rng = rand::rngs::StdRng::seed_from_u64(0xC0FFEE + seed);
                order.shuffle(&mut rng);
                orders.push(order);
            }
            let mut bad = None;
            for (pos, order) in orders.iter().enumerate() {
                let profile = HilbertSeries::from_coeffs(g.activity_profile(order).unwrap());
                if &profile != b {
                    bad = Some((pos, profile));
                    break;
                }
            }
            checks.push(match bad {
                None => Check::pass(
                    "external-activity",
                    "profile matches the series for 4 edge orders",
                ),
                Some((pos, profile)) => Check::fail(
                    "external-activity",
                    format!("order #{pos}: profile {profile}"),
                ),
            });
        }
    }

    // On complete graphs with k = 0 the graph predicate degenerates to the
    // classical one.
    let complete = (0..=n).all(|u| (0..=n).all(|v| u == v || g.multiplicity(u, v) == 1));
    if complete && k == 0 && n >= 1 {
        let mut bad = None;
        let mut a = vec![0u32; n];
        'box_scan: loop {
            let v = ExponentVector::new(a.clone());
            if parking::is_g_parking(g, &v, 0) != parking::is_classical_parking(&v) {
                bad = Some(v);
                break;
            }
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
                break 'box_scan;
            }
        }
        checks.push(match bad {
            None => Check::pass("classical-equivalence", "graph and classical tests agree"),
            Some(v) => Check::fail("classical-equivalence", format!("disagreement at {v}")),
        });
    }

    checks
}

fn involution_check(
    g: &RootedMultigraph,
    chains: &[involution::SubsetChain],
    forests: &[crate::graph::Forest],
) -> Check {
    let subgraphs = g.enumerate_functional_subgraphs();
    let mut fixed = 0u64;
    for chain in chains {
        for h in subgraphs.iter().filter(|h| is_compatible(h, chain)) {
            let labeling = label_special(h);
            // Chain membership forces specialness.
            for set in chain.sets() {
                for i in set.iter() {
                    if !labeling.is_special(i) {
                        return Check::fail(
                            "involution",
                            format!("vertex {i} of {set} is not special for {h}"),
                        );
                    }
                }
            }
            let image = match involution::apply(h, chain) {
                Ok(image) => image,
                Err(e) => return Check::fail("involution", e.to_string()),
            };
            if image == *chain {
                fixed += 1;
                if !chain.is_empty() || !labeling.all_nonspecial() {
                    return Check::fail(
                        "involution",
                        format!("unexpected fixed point {h} / {chain}"),
                    );
                }
                // Each nonspecial region must be a union of trees oriented
                // toward their component minima: exactly the canonical
                // orientation of the underlying forest.
                let undirected: Vec<crate::graph::UndirectedEdge> = (1..=g.n())
                    .filter_map(|v| {
                        h.out_edge(v)
                            .map(|(t, instance)| crate::graph::UndirectedEdge::new(v, t, instance))
                    })
                    .collect();
                match crate::graph::Forest::from_edges(g, undirected) {
                    Ok(f) => {
                        if &g.canonical_orientation(&f) != h {
                            return Check::fail(
                                "involution",
                                format!("fixed point {h} is not canonically oriented"),
                            );
                        }
                    }
                    Err(e) => {
                        return Check::fail(
                            "involution",
                            format!("fixed point {h} is not a forest: {e}"),
                        )
                    }
                }
            } else {
                let delta = image.len() as i64 - chain.len() as i64;
                if delta.abs() != 1 {
                    return Check::fail(
                        "involution",
                        format!("{h}: chain length changed by {delta}"),
                    );
                }
                match involution::apply(h, &image) {
                    Ok(back) if back == *chain => {}
                    Ok(back) => {
                        return Check::fail(
                            "involution",
                            format!("{h}: {chain} -> {image} -> {back}"),
                        )
                    }
                    Err(e) => return Check::fail("involution", e.to_string()),
                }
            }
        }
    }
    if fixed != forests.len() as u64 {
        return Check::fail(
            "involution",
            format!("{fixed} fixed points vs {} forests", forests.len()),
        );
    }
    Check::pass(
        "involution",
        format!("involution verified; {fixed} fixed points"),
    )
}
