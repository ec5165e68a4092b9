//! The two ideals attached to a rooted multigraph: the power ideal generated
//! by one power of a linear form per nonempty vertex subset, and its
//! monomization, which replaces each power by a single monomial.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{RootedMultigraph, VertexSubset};
use crate::parking::ExponentVector;

/// One generator `(x_{i_1} + ... + x_{i_m})^exponent` with `{i_1, ..., i_m}`
/// the support subset.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PowerGenerator {
    pub support: VertexSubset,
    pub exponent: u32,
}

/// The ideal generated by, for every nonempty subset `I` of non-root
/// vertices, the `(total exit degree of I) + k` power of the sum of the
/// variables indexed by `I`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerIdeal {
    n: usize,
    k: i64,
    generators: Vec<PowerGenerator>,
}

impl PowerIdeal {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// Generators in canonical subset order (increasing bitmask).
    pub fn generators(&self) -> &[PowerGenerator] {
        &self.generators
    }

    /// Exponent of the generator supported on `{i}`.
    pub fn singleton_exponent(&self, i: usize) -> u32 {
        self.generators
            .iter()
            .find(|g| g.support == VertexSubset::singleton(i))
            .map(|g| g.exponent)
            .expect("complete family has every singleton")
    }

    /// Total degree past which every graded piece of the quotient vanishes:
    /// one more than the sum over variables of (pure-power bound - 1).
    pub fn degree_cap(&self) -> u32 {
        (1..=self.n)
            .map(|i| self.singleton_exponent(i) - 1)
            .sum::<u32>()
            + 1
    }
}

/// Builds the power ideal of `g`. Fails if some subset would get a
/// non-positive exponent (possible only for `k <= 0`).
pub fn power_ideal(g: &RootedMultigraph, k: i64) -> Result<PowerIdeal> {
    let mut generators = Vec::with_capacity((1usize << g.n()) - 1);
    for subset in VertexSubset::nonempty_subsets(g.n()) {
        let exit_degree = g.total_exit_degree(subset)?;
        let exponent = exit_degree as i64 + k;
        if exponent <= 0 {
            return Err(Error::NonPositiveExponent {
                subset,
                exit_degree,
                k,
            });
        }
        generators.push(PowerGenerator {
            support: subset,
            exponent: exponent as u32,
        });
    }
    Ok(PowerIdeal {
        n: g.n(),
        k,
        generators,
    })
}

/// Threshold exponent of `x_i` in the monomization generator for `subset`:
/// the exit degree of `i`, plus one when `k = 1` and `i` is the smallest
/// member. Zero for vertices outside the subset.
pub fn monomial_exponent(g: &RootedMultigraph, subset: VertexSubset, i: usize, k: i64) -> u32 {
    assert!(
        k == 0 || k == 1,
        "monomial exponents are defined for k in {{0, 1}}"
    );
    if !subset.contains(i) {
        return 0;
    }
    let d = g
        .exit_degree(subset, i)
        .expect("i is a member of a nonempty subset");
    if k == 1 && subset.min_vertex() == Some(i) {
        d + 1
    } else {
        d
    }
}

/// One monomial generator together with the subset it came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialGenerator {
    pub support: VertexSubset,
    pub exponents: ExponentVector,
}

impl MonomialGenerator {
    pub fn total_degree(&self) -> u32 {
        self.exponents.degree()
    }
}

impl fmt::Display for MonomialGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (from {})", self.exponents, self.support)
    }
}

/// A family of monomial generators indexed by vertex subsets. Produced
/// complete (one generator per nonempty subset) by [`monomize`], but
/// hand-built partial families are allowed, e.g. for the monotone check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    n: usize,
    k: i64,
    generators: Vec<MonomialGenerator>,
}

impl MonomialIdeal {
    pub fn new(n: usize, k: i64, generators: Vec<MonomialGenerator>) -> Self {
        MonomialIdeal { n, k, generators }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// Generators in the order supplied; [`monomize`] uses canonical subset
    /// order (increasing bitmask).
    pub fn generators(&self) -> &[MonomialGenerator] {
        &self.generators
    }

    /// Irredundant generating set: duplicates collapsed and every generator
    /// divisible by another dropped. Sorted by degree, then lexicographically.
    pub fn minimal_generators(&self) -> Vec<MonomialGenerator> {
        let mut sorted: Vec<&MonomialGenerator> = self.generators.iter().collect();
        sorted.sort_by(|a, b| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then_with(|| a.exponents.cmp(&b.exponents))
                .then_with(|| a.support.cmp(&b.support))
        });
        let mut kept: Vec<MonomialGenerator> = Vec::new();
        for g in sorted {
            if !kept.iter().any(|h| h.exponents.divides(&g.exponents)) {
                kept.push(g.clone());
            }
        }
        kept
    }
}

/// Builds the monomization of the power ideal of `g`: for each nonempty
/// subset, the product of the threshold powers of its member variables.
/// Only `k = 0` and `k = 1` are supported.
pub fn monomize(g: &RootedMultigraph, k: i64) -> Result<MonomialIdeal> {
    if k != 0 && k != 1 {
        return Err(Error::UnsupportedK(k));
    }
    let n = g.n();
    let mut generators = Vec::with_capacity((1usize << n) - 1);
    for subset in VertexSubset::nonempty_subsets(n) {
        let exponents = ExponentVector::new(
            (1..=n)
                .map(|i| monomial_exponent(g, subset, i, k))
                .collect(),
        );
        generators.push(MonomialGenerator {
            support: subset,
            exponents,
        });
    }
    Ok(MonomialIdeal { n, k, generators })
}

/// Outcome of the monotone-family check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonotoneCheck {
    Pass,
    /// A generator involves a variable outside its subset.
    SupportViolation {
        support: VertexSubset,
        vertex: usize,
    },
    /// Growing the subset increased the degree of a member variable.
    DegreeViolation {
        inner: VertexSubset,
        outer: VertexSubset,
        vertex: usize,
    },
}

/// Checks the two monotone-family conditions: each generator uses only
/// variables from its subset, and for nested subsets `I` inside `J` the
/// degree of each `x_i` with `i` in `I` does not grow from `I` to `J`.
/// Returns the first violation in generator order.
pub fn check_monotone_family(ideal: &MonomialIdeal) -> MonotoneCheck {
    for g in ideal.generators() {
        for i in 1..=ideal.n() {
            if g.exponents.exponent(i) > 0 && !g.support.contains(i) {
                return MonotoneCheck::SupportViolation {
                    support: g.support,
                    vertex: i,
                };
            }
        }
    }
    for inner in ideal.generators() {
        for outer in ideal.generators() {
            if !inner.support.is_proper_subset_of(outer.support) {
                continue;
            }
            for i in inner.support.iter() {
                if outer.exponents.exponent(i) > inner.exponents.exponent(i) {
                    return MonotoneCheck::DegreeViolation {
                        inner: inner.support,
                        outer: outer.support,
                        vertex: i,
                    };
                }
            }
        }
    }
    MonotoneCheck::Pass
}
