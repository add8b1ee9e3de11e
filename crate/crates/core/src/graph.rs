//! Dense simple undirected graphs over bit rows.
//!
//! Vertices are `0..n`. Every graph is immutable once built; derived graphs
//! (complements, switchings, induced subgraphs) are fresh values.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Largest vertex count a [`Graph`] may have.
pub const MAX_VERTICES: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph on {0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A subset of the vertices `0..n` of some graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        VertexSet { n, words }
    }

    /// Size of the ambient vertex set.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter::new(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_universe(&self, other: &VertexSet) {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        VertexSet::from_words(self.n, words)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        VertexSet::from_words(self.n, words)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        VertexSet::from_words(self.n, words)
    }

    pub fn complement(&self) -> VertexSet {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        mask_tail(&mut words, self.n);
        VertexSet::from_words(self.n, words)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

pub(crate) fn mask_tail(words: &mut [u64], n: usize) {
    if !n.is_multiple_of(64) {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << (n % 64)) - 1;
        }
    }
}

/// Orders sets by their ascending vertex lists, lexicographically.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the set bits of a word slice.
pub struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Simple undirected graph stored as `n` adjacency bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let stride = words_for(n);
        Ok(Graph {
            n,
            stride,
            adj: vec![0; stride * n],
        })
    }

    /// Builds a graph with exactly the listed edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric irreflexive predicate evaluated on `u < v`.
    pub fn from_fn<F: FnMut(usize, usize) -> bool>(n: usize, mut adjacent: F) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.stride + v / 64] |= 1 << (v % 64);
        self.adj[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    fn toggle_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.stride + v / 64] ^= 1 << (v % 64);
        self.adj[v * self.stride + u / 64] ^= 1 << (u % 64);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Words per adjacency row.
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.stride..(u + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(u).to_vec())
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter::new(self.row(u)) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Vertices outside `x` adjacent to some vertex of `x`.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        assert_eq!(x.universe(), self.n);
        let mut words = vec![0u64; self.stride];
        for u in x.iter() {
            for (w, r) in words.iter_mut().zip(self.row(u)) {
                *w |= r;
            }
        }
        for (w, xw) in words.iter_mut().zip(x.words()) {
            *w &= !xw;
        }
        VertexSet::from_words(self.n, words)
    }

    /// Connected components of the subgraph induced on `within`, ordered by least vertex.
    pub fn components(&self, within: &VertexSet) -> Vec<VertexSet> {
        assert_eq!(within.universe(), self.n);
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::empty(self.n);
            comp.insert(start);
            let mut frontier = comp.clone();
            left.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.n);
                for u in frontier.iter() {
                    for (w, r) in next.words.iter_mut().zip(self.row(u)) {
                        *w |= r;
                    }
                }
                next.intersect_with(&left);
                left.difference_with(&next);
                comp.union_with(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components(&self.vertices()).len() == 1
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| self.degree(u) + 1 == self.n)
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let vs = set.to_vec();
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for u in 0..self.n {
            let row = &mut g.adj[u * self.stride..(u + 1) * self.stride];
            for w in row.iter_mut() {
                *w = !*w;
            }
            mask_tail(row, self.n);
            row[u / 64] &= !(1 << (u % 64));
        }
        g
    }

    /// Complements exactly the pairs with one end in `x` and the other outside.
    pub fn seidel_switch(&self, x: &VertexSet) -> Graph {
        assert_eq!(x.universe(), self.n);
        let mut g = self.clone();
        for u in x.iter() {
            for v in 0..self.n {
                if !x.contains(v) {
                    g.toggle_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `keep`, relabelled to `0..keep.len()` in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let vs = keep.to_vec();
        Graph::from_fn(vs.len(), |i, j| self.has_edge(vs[i], vs[j])).expect("induced subgraph is smaller")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
