//! The alternating sum over chains of vertex subsets, the compatible
//! functional subgraphs counted by each chain, and the sign-reversing
//! involution that pairs those chains off, leaving one fixed point per
//! forest.
//!
//! Everything here concerns `k = 1`: the threshold exponent of a vertex `i`
//! relative to a chain is taken where `i` first appears.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{FunctionalSubgraph, RootedMultigraph, VertexSubset};
use crate::ideal::monomial_exponent;

/// A strictly increasing chain of nonempty vertex subsets (possibly empty).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SubsetChain {
    sets: Vec<VertexSubset>,
}

impl SubsetChain {
    pub fn empty() -> Self {
        SubsetChain::default()
    }

    /// Validates that the sets are nonempty and strictly increasing.
    pub fn new(sets: Vec<VertexSubset>) -> Result<Self> {
        for (pos, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidChain(format!(
                    "set at position {pos} is empty"
                )));
            }
            if pos > 0 && !sets[pos - 1].is_proper_subset_of(*s) {
                return Err(Error::InvalidChain(format!(
                    "{} does not strictly contain {}",
                    s,
                    sets[pos - 1]
                )));
            }
        }
        Ok(SubsetChain { sets })
    }

    pub fn sets(&self) -> &[VertexSubset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn last(&self) -> Option<VertexSubset> {
        self.sets.last().copied()
    }

    /// The first (smallest) set of the chain containing `v`, if any.
    pub fn first_containing(&self, v: usize) -> Option<VertexSubset> {
        self.sets.iter().copied().find(|s| s.contains(v))
    }
}

impl fmt::Display for SubsetChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sets.is_empty() {
            return write!(f, "(empty chain)");
        }
        for (pos, s) in self.sets.iter().enumerate() {
            if pos > 0 {
                write!(f, " < ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Every strictly increasing chain of nonempty subsets of `{1, ..., n}`,
/// including the empty chain, in depth-first order by increasing bitmask.
pub fn subset_chains(n: usize) -> Vec<SubsetChain> {
    fn extend(n: usize, chain: &mut Vec<VertexSubset>, out: &mut Vec<SubsetChain>) {
        out.push(SubsetChain {
            sets: chain.clone(),
        });
        let last = chain.last().map_or(0, |s| s.bits());
        for bits in last + 1..(1u32 << n) {
            if bits & last == last && bits != last {
                chain.push(VertexSubset::from_bits(bits));
                extend(n, chain, out);
                chain.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

/// The unsigned term a chain contributes to the alternating sum: a product
/// over vertices of the number of admissible out-edge choices. A vertex
/// first appearing in set `I` contributes `(out_degree + 1)` minus its
/// threshold exponent for `I`; a vertex in no set contributes the full
/// `out_degree + 1`.
pub fn chain_term(g: &RootedMultigraph, chain: &SubsetChain) -> u64 {
    let mut product = 1u64;
    for i in 1..=g.n() {
        let free = g.out_degree(i) as u64 + 1;
        let factor = match chain.first_containing(i) {
            None => free,
            Some(first) => free - monomial_exponent(g, first, i, 1) as u64,
        };
        product *= factor;
    }
    product
}

/// Compatibility of a functional subgraph with a chain: wherever a vertex
/// first appears, its out-edge (if any) must stay inside that set, and the
/// minimum of every set in the chain must have an out-edge.
pub fn is_compatible(h: &FunctionalSubgraph, chain: &SubsetChain) -> bool {
    for i in 1..=h.n() {
        if let (Some(first), Some((target, _))) = (chain.first_containing(i), h.out_edge(i)) {
            if !first.contains(target) {
                return false;
            }
        }
    }
    chain.sets().iter().all(|s| {
        h.out_edge(s.min_vertex().expect("chain sets are nonempty"))
            .is_some()
    })
}

/// Brute-force count of the functional subgraphs compatible with the chain;
/// equals [`chain_term`].
pub fn count_compatible_pairs(g: &RootedMultigraph, chain: &SubsetChain) -> u64 {
    g.enumerate_functional_subgraphs()
        .iter()
        .filter(|h| is_compatible(h, chain))
        .count() as u64
}

/// Special/nonspecial labels on the vertices `0..=n` of a functional
/// subgraph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecialLabeling {
    special: Vec<bool>,
}

impl SpecialLabeling {
    pub fn is_special(&self, v: usize) -> bool {
        self.special[v]
    }

    /// The set of special vertices (the root is never special).
    pub fn special_set(&self) -> VertexSubset {
        let mut s = VertexSubset::EMPTY;
        for v in 1..self.special.len() {
            if self.special[v] {
                s.insert(v);
            }
        }
        s
    }

    pub fn all_nonspecial(&self) -> bool {
        self.special.iter().all(|&b| !b)
    }
}

/// Labels vertices by repeatedly examining the smallest unlabeled vertex
/// `v`: if `v` still has an outgoing arc, `v` and every remaining unlabeled
/// vertex become special and the process stops; otherwise `v` is nonspecial
/// together with every unlabeled vertex whose out-path terminates at `v`
/// (vertices on cycles never terminate). No vertex is special exactly when
/// the subgraph orients each of its components toward the component minimum.
pub fn label_special(h: &FunctionalSubgraph) -> SpecialLabeling {
    let len = h.n() + 1;
    let terminal: Vec<Option<usize>> = (0..len).map(|v| h.terminal(v)).collect();
    let mut label: Vec<Option<bool>> = vec![None; len];
    while let Some(v) = (0..len).find(|&v| label[v].is_none()) {
        if h.out_edge(v).is_some() {
            for slot in label.iter_mut().filter(|slot| slot.is_none()) {
                *slot = Some(true);
            }
            break;
        }
        for u in v..len {
            if label[u].is_none() && terminal[u] == Some(v) {
                label[u] = Some(false);
            }
        }
    }
    SpecialLabeling {
        special: label.into_iter().map(|b| b.unwrap()).collect(),
    }
}

/// The sign-reversing involution on compatible (subgraph, chain) pairs:
/// computes the special set `S` of the subgraph, then removes the last set
/// of the chain if it equals `S` and appends `S` otherwise. Pairs with an
/// empty special set and an empty chain are the fixed points; they are
/// exactly the canonical orientations of forests.
pub fn apply(h: &FunctionalSubgraph, chain: &SubsetChain) -> Result<SubsetChain> {
    if !is_compatible(h, chain) {
        let mut reasons = Vec::new();
        for i in 1..=h.n() {
            if let (Some(first), Some((target, _))) = (chain.first_containing(i), h.out_edge(i)) {
                if !first.contains(target) {
                    reasons.push(format!("arc {i}->{target} leaves {first}"));
                }
            }
        }
        for s in chain.sets() {
            let m = s.min_vertex().unwrap();
            if h.out_edge(m).is_none() {
                reasons.push(format!("vertex {m}, the minimum of {s}, has no arc"));
            }
        }
        return Err(Error::IncompatiblePair {
            chain: chain.to_string(),
            reason: reasons.join("; "),
        });
    }
    let s = label_special(h).special_set();
    let mut sets = chain.sets().to_vec();
    if chain.last() == Some(s) {
        sets.pop();
        Ok(SubsetChain { sets })
    } else if s.is_empty() {
        // Fixed point. For a compatible pair an empty special set forces an
        // empty chain: walking out-arcs from the minimum of the first set
        // would otherwise exhibit a special vertex.
        debug_assert!(chain.is_empty());
        Ok(SubsetChain { sets })
    } else {
        sets.push(s);
        SubsetChain::new(sets)
    }
}

/// Result of evaluating the alternating sum over all chains.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AlternatingSumReport {
    /// The signed total; equals the number of forests of the graph.
    pub value: i64,
    /// Number of chains enumerated (including the empty chain).
    pub chain_count: u64,
    /// Chains contributing a nonzero term.
    pub nonzero_chains: u64,
}

/// Evaluates the alternating sum of chain terms, the length of the chain
/// giving the sign.
pub fn alternating_sum(g: &RootedMultigraph) -> AlternatingSumReport {
    let mut value = 0i64;
    let mut chain_count = 0u64;
    let mut nonzero_chains = 0u64;
    for chain in subset_chains(g.n()) {
        let term = chain_term(g, &chain) as i64;
        chain_count += 1;
        if term != 0 {
            nonzero_chains += 1;
        }
        value += if chain.len() % 2 == 0 { term } else { -term };
    }
    AlternatingSumReport {
        value,
        chain_count,
        nonzero_chains,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> RootedMultigraph {
        RootedMultigraph::complete(3).unwrap()
    }

    fn example4() -> RootedMultigraph {
        crate::io::parse_graph(include_str!("../../../fixtures/example4.graph")).unwrap()
    }

    fn vs(members: &[usize]) -> VertexSubset {
        VertexSubset::from_vertices(members)
    }

    #[test]
    fn chain_enumeration() {
        let chains = subset_chains(2);
        assert_eq!(chains.len(), 6);
        assert_eq!(chains[0], SubsetChain::empty());
        assert_eq!(subset_chains(3).len(), 26);
        assert_eq!(subset_chains(4).len(), 150);
        for chain in subset_chains(4) {
            // Each enumerated chain passes its own validation.
            assert!(SubsetChain::new(chain.sets().to_vec()).is_ok());
        }
    }

    #[test]
    fn chain_validation() {
        assert!(SubsetChain::new(vec![vs(&[1]), vs(&[1, 2])]).is_ok());
        assert!(matches!(
            SubsetChain::new(vec![vs(&[1]), vs(&[2])]),
            Err(Error::InvalidChain(_))
        ));
        assert!(matches!(
            SubsetChain::new(vec![vs(&[1]), vs(&[1])]),
            Err(Error::InvalidChain(_))
        ));
        assert!(matches!(
            SubsetChain::new(vec![VertexSubset::EMPTY]),
            Err(Error::InvalidChain(_))
        ));
    }

    #[test]
    fn chain_terms_on_k3() {
        let g = k3();
        assert_eq!(chain_term(&g, &SubsetChain::empty()), 9);
        let single = |s: VertexSubset| SubsetChain::new(vec![s]).unwrap();
        assert_eq!(chain_term(&g, &single(vs(&[1]))), 0);
        assert_eq!(chain_term(&g, &single(vs(&[2]))), 0);
        assert_eq!(chain_term(&g, &single(vs(&[1, 2]))), 2);
        let report = alternating_sum(&g);
        assert_eq!(report.value, 7);
        assert_eq!(report.chain_count, 6);
        assert_eq!(report.nonzero_chains, 2);
    }

    #[test]
    fn alternating_sum_matches_forest_count() {
        for g in [
            k3(),
            example4(),
            RootedMultigraph::complete(4).unwrap(),
            RootedMultigraph::complete(5).unwrap(),
            RootedMultigraph::undirected(1, &[(0, 1, 2)]).unwrap(),
        ] {
            let forests = g.enumerate_forests().unwrap().len() as i64;
            assert_eq!(alternating_sum(&g).value, forests);
        }
        let report = alternating_sum(&example4());
        assert_eq!((report.value, report.nonzero_chains), (82, 24));
        let report = alternating_sum(&RootedMultigraph::complete(5).unwrap());
        assert_eq!((report.value, report.nonzero_chains), (291, 46));
    }

    #[test]
    fn compatible_pair_counts_equal_chain_terms() {
        for g in [k3(), example4()] {
            for chain in subset_chains(g.n()) {
                assert_eq!(
                    count_compatible_pairs(&g, &chain),
                    chain_term(&g, &chain),
                    "graph {g:?}, chain {chain}"
                );
            }
        }
    }

    #[test]
    fn labeling_examples() {
        let g = k3();
        // 2 -> 1: everything drains to a sink; no special vertices.
        let h = FunctionalSubgraph::new(&g, &[(2, 1, 0)]).unwrap();
        assert!(label_special(&h).all_nonspecial());
        // 1 -> 2: vertex 1 is the smallest unlabeled vertex with an arc, so
        // {1, 2} become special.
        let h = FunctionalSubgraph::new(&g, &[(1, 2, 0)]).unwrap();
        assert_eq!(label_special(&h).special_set(), vs(&[1, 2]));
        // Empty subgraph: all nonspecial.
        let h = FunctionalSubgraph::empty(2);
        assert!(label_special(&h).all_nonspecial());
        // A 2-cycle never terminates, so it ends up special.
        let g4 = example4();
        let h = FunctionalSubgraph::new(&g4, &[(3, 4, 0), (4, 3, 0)]).unwrap();
        assert_eq!(label_special(&h).special_set(), vs(&[3, 4]));
        let labeling = label_special(&h);
        assert!(!labeling.is_special(0) && !labeling.is_special(1));
    }

    #[test]
    fn kappa_swaps_a_simple_pair() {
        let g = k3();
        let h = FunctionalSubgraph::new(&g, &[(1, 2, 0)]).unwrap();
        let there = apply(&h, &SubsetChain::empty()).unwrap();
        assert_eq!(there, SubsetChain::new(vec![vs(&[1, 2])]).unwrap());
        let back = apply(&h, &there).unwrap();
        assert_eq!(back, SubsetChain::empty());
    }

    #[test]
    fn kappa_rejects_incompatible_pairs() {
        let g = k3();
        let h = FunctionalSubgraph::new(&g, &[(1, 0, 0)]).unwrap();
        let chain = SubsetChain::new(vec![vs(&[1, 2])]).unwrap();
        let err = apply(&h, &chain).unwrap_err();
        assert!(matches!(err, Error::IncompatiblePair { .. }));
        assert!(err.to_string().contains("arc 1->0 leaves {1,2}"));
    }

    #[test]
    fn kappa_is_a_sign_reversing_involution() {
        for g in [k3(), example4()] {
            let subgraphs = g.enumerate_functional_subgraphs();
            let mut fixed = 0u64;
            let mut paired = 0u64;
            for chain in subset_chains(g.n()) {
                for h in subgraphs.iter().filter(|h| is_compatible(h, &chain)) {
                    let image = apply(h, &chain).unwrap();
                    if image == chain {
                        fixed += 1;
                        assert!(chain.is_empty());
                        assert!(label_special(h).all_nonspecial());
                    } else {
                        paired += 1;
                        // Sign reverses: lengths differ by exactly one.
                        assert_eq!(
                            (image.len() as i64 - chain.len() as i64).abs(),
                            1,
                            "{h} / {chain} -> {image}"
                        );
                        // The image is compatible and maps back.
                        assert!(is_compatible(h, &image));
                        assert_eq!(apply(h, &image).unwrap(), chain, "{h} / {chain}");
                    }
                }
            }
            assert_eq!(paired % 2, 0);
            let forests = g.enumerate_forests().unwrap().len() as u64;
            assert_eq!(fixed, forests);
        }
    }

    #[test]
    fn fixed_points_are_canonical_forest_orientations() {
        let g = example4();
        let mut fixed: Vec<FunctionalSubgraph> = g
            .enumerate_functional_subgraphs()
            .into_iter()
            .filter(|h| label_special(h).all_nonspecial())
            .collect();
        let mut canonical: Vec<FunctionalSubgraph> = g
            .enumerate_forests()
            .unwrap()
            .iter()
            .map(|f| g.canonical_orientation(f))
            .collect();
        fixed.sort();
        canonical.sort();
        assert_eq!(fixed, canonical);
    }
}
