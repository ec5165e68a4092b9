//! Exponent vectors, parking-function predicates, and the standard-monomial
//! basis of a quotient by a monomial ideal.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::RootedMultigraph;
use crate::ideal::{monomial_exponent, MonomialIdeal};
use crate::series::HilbertSeries;

/// Exponents `(a_1, ..., a_n)` of a monomial in `x_1, ..., x_n`. The derived
/// order is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent of `x_vertex` (vertices are 1-based).
    pub fn exponent(&self, vertex: usize) -> u32 {
        self.0[vertex - 1]
    }

    pub fn set_exponent(&mut self, vertex: usize, value: u32) {
        self.0[vertex - 1] = value;
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// True when the monomial with these exponents divides the other one,
    /// i.e. the vectors compare coordinatewise.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        assert_eq!(self.len(), other.len(), "mismatched variable counts");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// True when every coordinate is zero (the monomial is 1).
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, a) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Classical parking function test: some rearrangement `b_1 <= ... <= b_n`
/// satisfies `b_i <= i - 1`.
pub fn is_classical_parking(a: &ExponentVector) -> bool {
    let mut sorted = a.as_slice().to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &b)| b as usize <= i)
}

/// Parking test relative to a graph: for every nonempty subset `I` of the
/// non-root vertices, some member has `a_i` strictly below its threshold
/// exponent for `I`.
pub fn is_g_parking(g: &RootedMultigraph, a: &ExponentVector, k: i64) -> bool {
    assert_eq!(a.len(), g.n(), "vector length must equal vertex count");
    crate::graph::VertexSubset::nonempty_subsets(g.n()).all(|subset| {
        subset
            .iter()
            .any(|i| a.exponent(i) < monomial_exponent(g, subset, i, k))
    })
}

fn box_bounds(ideal: &MonomialIdeal) -> Result<Vec<u32>> {
    let n = ideal.n();
    let mut bounds = Vec::with_capacity(n);
    for i in 1..=n {
        // Only a generator that is a pure power of x_i can bound the box in
        // direction i; take the smallest such power.
        let bound = ideal
            .generators()
            .iter()
            .filter(|g| {
                (1..=n).all(|j| j == i || g.exponents.exponent(j) == 0)
                    && (g.exponents.exponent(i) > 0
                        || g.support == crate::graph::VertexSubset::singleton(i))
            })
            .map(|g| g.exponents.exponent(i))
            .min();
        match bound {
            None | Some(0) => return Err(Error::InfiniteQuotient(i)),
            Some(b) => bounds.push(b),
        }
    }
    Ok(bounds)
}

/// Enumerates the standard monomials of the quotient by the ideal: monomials
/// divisible by no generator. Sorted by total degree, then lexicographically.
///
/// Every variable must be bounded by a positive pure power among the
/// generators, otherwise the quotient is reported as infinite.
pub fn standard_monomials(ideal: &MonomialIdeal) -> Result<Vec<ExponentVector>> {
    let n = ideal.n();
    let bounds = box_bounds(ideal)?;
    let minimal = ideal.minimal_generators();
    if minimal.iter().any(|g| g.exponents.is_zero()) {
        // The ideal contains 1; the quotient is the zero ring.
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut a = vec![0u32; n];
    'scan: loop {
        let candidate = ExponentVector::new(a.clone());
        if !minimal.iter().any(|g| g.exponents.divides(&candidate)) {
            out.push(candidate);
        }
        // Odometer step through the box 0 <= a_i < bounds[i].
        for i in 0..n {
            a[i] += 1;
            if a[i] < bounds[i] {
                continue 'scan;
            }
            a[i] = 0;
        }
        break;
    }
    out.sort_by(|x, y| x.degree().cmp(&y.degree()).then_with(|| x.cmp(y)));
    Ok(out)
}

/// Hilbert series of the quotient by the ideal, computed by counting
/// standard monomials per degree.
pub fn hilbert_series(ideal: &MonomialIdeal) -> Result<HilbertSeries> {
    let monomials = standard_monomials(ideal)?;
    let degree = monomials.iter().map(|m| m.degree()).max().unwrap_or(0) as usize;
    let mut coeffs = vec![0u64; degree + 1];
    for m in &monomials {
        coeffs[m.degree() as usize] += 1;
    }
    Ok(HilbertSeries::from_coeffs(coeffs))
}

/// Number of distinct multisets among the vectors (orbits under permuting
/// coordinates).
pub fn orbit_count(vectors: &[ExponentVector]) -> usize {
    let mut orbits = BTreeSet::new();
    for v in vectors {
        let mut sorted = v.as_slice().to_vec();
        sorted.sort_unstable();
        orbits.insert(sorted);
    }
    orbits.len()
}

/// Stable text listing: a `# n=.. k=.. dim=..` header followed by one
/// space-separated exponent vector per line.
pub fn format_listing(n: usize, k: i64, vectors: &[ExponentVector]) -> String {
    let mut out = format!("# n={n} k={k} dim={}\n", vectors.len());
    for v in vectors {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}
