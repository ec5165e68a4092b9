//! Rooted multigraphs and their combinatorial companions: vertex subsets,
//! forests of edge instances, and functional subgraphs.
//!
//! Vertices are `0..=n` with `0` the root. Parallel edges are allowed and kept
//! distinct (each undirected edge of multiplicity `m` contributes `m`
//! instances); self-loops are rejected everywhere because they never change an
//! exit degree.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of the non-root vertices `{1, ..., n}`, stored as a bitmask
/// (vertex `i` maps to bit `i - 1`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSubset(u32);

impl VertexSubset {
    /// Largest supported non-root vertex count. Everything in this crate
    /// enumerates `2^n` subsets somewhere, so this is a generous ceiling.
    pub const MAX_VERTICES: usize = 16;

    pub const EMPTY: VertexSubset = VertexSubset(0);

    /// Subset containing exactly `v`. Panics unless `1 <= v <= MAX_VERTICES`.
    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    /// Subset with the given members. Panics on out-of-range vertices.
    pub fn from_vertices(vertices: &[usize]) -> Self {
        let mut s = Self::EMPTY;
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    /// The full subset `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_VERTICES, "too many vertices: {n}");
        VertexSubset(((1u64 << n) - 1) as u32)
    }

    /// Rebuild from a raw bitmask, e.g. one produced by [`Self::bits`].
    pub fn from_bits(bits: u32) -> Self {
        VertexSubset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=Self::MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            (1..=Self::MAX_VERTICES).contains(&v),
            "vertex {v} out of range 1..={}",
            Self::MAX_VERTICES
        );
        self.0 |= 1 << (v - 1);
    }

    /// A copy of `self` with `v` added.
    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Self) -> bool {
        self != other && self.is_subset_of(other)
    }

    /// All `2^n - 1` nonempty subsets of `{1, ..., n}` in increasing bitmask
    /// order. This is the canonical generator order used across the crate.
    pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = VertexSubset> {
        assert!(n <= Self::MAX_VERTICES, "too many vertices: {n}");
        (1..(1u32 << n)).map(VertexSubset)
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, v) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One instance of an undirected edge: endpoints `u < v` plus an index that
/// distinguishes parallel copies (`instance < multiplicity(u, v)`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct UndirectedEdge {
    pub u: usize,
    pub v: usize,
    pub instance: u32,
}

impl UndirectedEdge {
    pub fn new(u: usize, v: usize, instance: u32) -> Self {
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        UndirectedEdge { u, v, instance }
    }

    /// The endpoint other than `w`. Panics if `w` is not an endpoint.
    pub fn other(self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            assert_eq!(w, self.v, "vertex {w} is not an endpoint of {self}");
            self.u
        }
    }
}

impl fmt::Display for UndirectedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.instance == 0 {
            write!(f, "{}-{}", self.u, self.v)
        } else {
            write!(f, "{}-{}#{}", self.u, self.v, self.instance)
        }
    }
}

/// An acyclic set of edge instances of a particular graph, kept sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Forest {
    edges: Vec<UndirectedEdge>,
}

impl Forest {
    pub fn empty() -> Self {
        Forest::default()
    }

    /// Validates that the edges are distinct instances of `g` and acyclic.
    pub fn from_edges(g: &RootedMultigraph, mut edges: Vec<UndirectedEdge>) -> Result<Self> {
        if !g.is_undirected() {
            return Err(Error::DirectedGraph);
        }
        edges.sort();
        let mut dsu = Dsu::new(g.vertex_count());
        for pair in edges.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidEdge(format!("duplicate edge {}", pair[0])));
            }
        }
        for &e in &edges {
            g.check_instance(e)?;
            if !dsu.union(e.u, e.v) {
                return Err(Error::InvalidEdge(format!("edge {e} closes a cycle")));
            }
        }
        Ok(Forest { edges })
    }

    pub fn edges(&self) -> &[UndirectedEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &UndirectedEdge) -> bool {
        self.edges.binary_search(e).is_ok()
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return write!(f, "(empty)");
        }
        for (pos, e) in self.edges.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// A subgraph in which every non-root vertex has at most one outgoing arc
/// (the root never has one). Arcs carry the instance index of the underlying
/// parallel edge so that subgraphs of multigraphs stay distinguishable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FunctionalSubgraph {
    out: Vec<Option<(usize, u32)>>, // indexed by vertex; out[0] is always None
}

impl FunctionalSubgraph {
    pub fn empty(n: usize) -> Self {
        FunctionalSubgraph {
            out: vec![None; n + 1],
        }
    }

    /// Builds from `(source, target, instance)` triples, validating each arc
    /// against `g` and rejecting repeated sources.
    pub fn new(g: &RootedMultigraph, arcs: &[(usize, usize, u32)]) -> Result<Self> {
        let mut h = FunctionalSubgraph::empty(g.n());
        for &(s, t, instance) in arcs {
            if s == 0 || s > g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: s,
                    max: g.n(),
                });
            }
            if t > g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: t,
                    max: g.n(),
                });
            }
            if s == t {
                return Err(Error::SelfLoop(s));
            }
            if instance >= g.multiplicity(s, t) {
                return Err(Error::InvalidEdge(format!(
                    "arc {s}->{t} instance {instance} exceeds multiplicity {}",
                    g.multiplicity(s, t)
                )));
            }
            if h.out[s].is_some() {
                return Err(Error::InvalidEdge(format!(
                    "vertex {s} has more than one outgoing arc"
                )));
            }
            h.out[s] = Some((t, instance));
        }
        Ok(h)
    }

    pub fn n(&self) -> usize {
        self.out.len() - 1
    }

    /// Target and instance of the single arc leaving `v`, if present.
    pub fn out_edge(&self, v: usize) -> Option<(usize, u32)> {
        self.out.get(v).copied().flatten()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().filter(|o| o.is_some()).count()
    }

    /// Follows outgoing arcs from `start` until a vertex without one is
    /// reached; returns `None` if the walk enters a cycle instead.
    pub fn terminal(&self, start: usize) -> Option<usize> {
        let mut cur = start;
        for _ in 0..self.out.len() {
            match self.out_edge(cur) {
                None => return Some(cur),
                Some((t, _)) => cur = t,
            }
        }
        None
    }
}

impl fmt::Display for FunctionalSubgraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for v in 1..self.out.len() {
            if let Some((t, instance)) = self.out[v] {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{v}->{t}")?;
                if instance > 0 {
                    write!(f, "#{instance}")?;
                }
            }
        }
        write!(f, "}}")
    }
}

/// Union-find over vertex indices.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(len: usize) -> Self {
        Dsu {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they already coincide.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            self.parent[ra] = rb;
            true
        }
    }
}

/// A multigraph on vertices `0..=n` with distinguished root `0`, stored as a
/// dense arc-multiplicity matrix. Undirected graphs keep the matrix
/// symmetric; directed graphs fill only the arcs given.
#[derive(Clone, PartialEq, Eq)]
pub struct RootedMultigraph {
    n: usize,
    undirected: bool,
    arcs: Vec<u32>, // (n + 1) x (n + 1), row-major
}

impl RootedMultigraph {
    fn build(n: usize, undirected: bool, edges: &[(usize, usize, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > VertexSubset::MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut g = RootedMultigraph {
            n,
            undirected,
            arcs: vec![0; (n + 1) * (n + 1)],
        };
        for &(u, v, m) in edges {
            if u > n {
                return Err(Error::VertexOutOfRange { vertex: u, max: n });
            }
            if v > n {
                return Err(Error::VertexOutOfRange { vertex: v, max: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.arcs[u * (n + 1) + v] += m;
            if undirected {
                g.arcs[v * (n + 1) + u] += m;
            }
        }
        Ok(g)
    }

    /// Undirected multigraph from `(u, v, multiplicity)` triples.
    pub fn undirected(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        Self::build(n, true, edges)
    }

    /// Directed multigraph from `(source, target, multiplicity)` triples.
    pub fn directed(n: usize, arcs: &[(usize, usize, u32)]) -> Result<Self> {
        Self::build(n, false, arcs)
    }

    /// Complete graph on `vertex_count` vertices including the root.
    pub fn complete(vertex_count: usize) -> Result<Self> {
        if vertex_count < 2 {
            return Err(Error::EmptyGraph);
        }
        let n = vertex_count - 1;
        let mut edges = Vec::new();
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                edges.push((u, v, 1));
            }
        }
        Self::build(n, true, &edges)
    }

    /// Number of non-root vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices including the root.
    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    pub fn is_undirected(&self) -> bool {
        self.undirected
    }

    /// Multiplicity of the arc `u -> v` (equal to `v -> u` when undirected).
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.arcs[u * (self.n + 1) + v]
    }

    /// Total multiplicity of arcs leaving `v`.
    pub fn out_degree(&self, v: usize) -> u32 {
        (0..=self.n).map(|t| self.multiplicity(v, t)).sum()
    }

    /// Total number of edge instances: arcs if directed, undirected edges
    /// (each parallel copy counted once) if undirected.
    pub fn edge_count(&self) -> u32 {
        if self.undirected {
            (0..=self.n)
                .map(|u| {
                    (u + 1..=self.n)
                        .map(|v| self.multiplicity(u, v))
                        .sum::<u32>()
                })
                .sum()
        } else {
            (0..=self.n).map(|u| self.out_degree(u)).sum()
        }
    }

    /// Exit degree of `i` relative to `subset`: the multiplicity of arcs from
    /// `i` whose target lies outside `subset` (the root always does).
    pub fn exit_degree(&self, subset: VertexSubset, i: usize) -> Result<u32> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !subset.contains(i) {
            return Err(Error::VertexNotInSubset { vertex: i, subset });
        }
        Ok((0..=self.n)
            .filter(|&t| !subset.contains(t))
            .map(|t| self.multiplicity(i, t))
            .sum())
    }

    /// Sum of exit degrees over all members of `subset`.
    pub fn total_exit_degree(&self, subset: VertexSubset) -> Result<u32> {
        subset.iter().map(|i| self.exit_degree(subset, i)).sum()
    }

    fn check_instance(&self, e: UndirectedEdge) -> Result<()> {
        if e.u >= e.v || e.v > self.n {
            return Err(Error::InvalidEdge(format!("no such edge {e}")));
        }
        if e.instance >= self.multiplicity(e.u, e.v) {
            return Err(Error::InvalidEdge(format!(
                "edge {e} exceeds multiplicity {}",
                self.multiplicity(e.u, e.v)
            )));
        }
        Ok(())
    }

    /// All edge instances in increasing `(u, v, instance)` order. This is the
    /// canonical edge order used for external activity.
    pub fn edge_instances(&self) -> Result<Vec<UndirectedEdge>> {
        if !self.undirected {
            return Err(Error::DirectedGraph);
        }
        let mut out = Vec::new();
        for u in 0..=self.n {
            for v in u + 1..=self.n {
                for instance in 0..self.multiplicity(u, v) {
                    out.push(UndirectedEdge { u, v, instance });
                }
            }
        }
        Ok(out)
    }

    /// Every forest of edge instances (including the empty one), sorted.
    /// Parallel instances are distinct, so two copies of the same edge
    /// already form a cycle and never appear together.
    pub fn enumerate_forests(&self) -> Result<Vec<Forest>> {
        let instances = self.edge_instances()?;
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(
            instances: &[UndirectedEdge],
            idx: usize,
            dsu: &Dsu,
            current: &mut Vec<UndirectedEdge>,
            out: &mut Vec<Forest>,
        ) {
            if idx == instances.len() {
                out.push(Forest {
                    edges: current.clone(),
                });
                return;
            }
            rec(instances, idx + 1, dsu, current, out);
            let e = instances[idx];
            let mut with_e = Dsu {
                parent: dsu.parent.clone(),
            };
            if with_e.union(e.u, e.v) {
                current.push(e);
                rec(instances, idx + 1, &with_e, current, out);
                current.pop();
            }
        }
        rec(
            &instances,
            0,
            &Dsu::new(self.vertex_count()),
            &mut current,
            &mut out,
        );
        out.sort();
        Ok(out)
    }

    /// Orients every edge of the forest toward the smallest vertex of its
    /// connected component, producing an acyclic functional subgraph.
    pub fn canonical_orientation(&self, forest: &Forest) -> FunctionalSubgraph {
        let mut adj: Vec<Vec<(usize, UndirectedEdge)>> = vec![Vec::new(); self.vertex_count()];
        for &e in forest.edges() {
            adj[e.u].push((e.v, e));
            adj[e.v].push((e.u, e));
        }
        let mut h = FunctionalSubgraph::empty(self.n);
        let mut seen = vec![false; self.vertex_count()];
        for start in 0..=self.n {
            if seen[start] {
                continue;
            }
            // Scanning in increasing order makes `start` the component minimum.
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, e) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        h.out[w] = Some((v, e.instance));
                        queue.push_back(w);
                    }
                }
            }
        }
        h
    }

    /// Every functional subgraph: one independent choice of outgoing arc (or
    /// none) per non-root vertex. The count is the product over vertices of
    /// `out_degree + 1`.
    pub fn enumerate_functional_subgraphs(&self) -> Vec<FunctionalSubgraph> {
        let mut result = vec![FunctionalSubgraph::empty(self.n)];
        for v in 1..=self.n {
            let mut next = Vec::with_capacity(result.len() * (self.out_degree(v) as usize + 1));
            for h in &result {
                next.push(h.clone());
                for t in (0..=self.n).filter(|&t| t != v) {
                    for instance in 0..self.multiplicity(v, t) {
                        let mut h2 = h.clone();
                        h2.out[v] = Some((t, instance));
                        next.push(h2);
                    }
                }
            }
            result = next;
        }
        result
    }

    /// Number of externally active edges of `forest` with respect to the
    /// given total order on edge instances: an outside instance is active
    /// when it is the minimum edge of the unique cycle it closes.
    pub fn external_activity(&self, forest: &Forest, order: &[UndirectedEdge]) -> Result<u32> {
        let instances = self.edge_instances()?;
        {
            let mut sorted = order.to_vec();
            sorted.sort();
            if sorted != instances {
                return Err(Error::InvalidEdge(
                    "order must list every edge instance exactly once".into(),
                ));
            }
        }
        let position = |e: &UndirectedEdge| order.iter().position(|o| o == e).unwrap();
        let mut adj: Vec<Vec<(usize, UndirectedEdge)>> = vec![Vec::new(); self.vertex_count()];
        let mut dsu = Dsu::new(self.vertex_count());
        for &e in forest.edges() {
            self.check_instance(e)?;
            adj[e.u].push((e.v, e));
            adj[e.v].push((e.u, e));
            if !dsu.union(e.u, e.v) {
                return Err(Error::InvalidEdge(format!("edge {e} closes a cycle")));
            }
        }
        let mut active = 0;
        for &e in &instances {
            if forest.contains(&e) || dsu.find(e.u) != dsu.find(e.v) {
                continue;
            }
            // The cycle closed by e is e plus the forest path between its
            // endpoints; find that path by breadth-first search.
            let mut parent_edge: Vec<Option<UndirectedEdge>> = vec![None; self.vertex_count()];
            let mut seen = vec![false; self.vertex_count()];
            seen[e.u] = true;
            let mut queue = VecDeque::from([e.u]);
            while let Some(v) = queue.pop_front() {
                if v == e.v {
                    break;
                }
                for &(w, f) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent_edge[w] = Some(f);
                        queue.push_back(w);
                    }
                }
            }
            let mut min_pos = position(&e);
            let mut cur = e.v;
            while let Some(f) = parent_edge[cur] {
                min_pos = min_pos.min(position(&f));
                cur = f.other(cur);
            }
            if min_pos == position(&e) {
                active += 1;
            }
        }
        Ok(active)
    }

    /// Distribution of `|E| - |F| - activity(F)` over all spanning forests
    /// `F`, as coefficients indexed by that degree. The resulting vector does
    /// not depend on the chosen edge order.
    pub fn activity_profile(&self, order: &[UndirectedEdge]) -> Result<Vec<u64>> {
        let total = self.edge_count() as usize;
        let mut profile = vec![0u64; total + 1];
        for forest in self.enumerate_forests()? {
            let active = self.external_activity(&forest, order)? as usize;
            profile[total - forest.len() - active] += 1;
        }
        Ok(profile)
    }
}

impl fmt::Debug for RootedMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RootedMultigraph(n={}, {}",
            self.n,
            if self.undirected {
                "undirected"
            } else {
                "directed"
            }
        )?;
        for u in 0..=self.n {
            for v in 0..=self.n {
                let m = self.multiplicity(u, v);
                if m > 0 && (!self.undirected || u < v) {
                    write!(f, ", {u}-{v}")?;
                    if m > 1 {
                        write!(f, "x{m}")?;
                    }
                }
            }
        }
        write!(f, ")")
    }
}
