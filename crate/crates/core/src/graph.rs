//! Immutable simple undirected graphs on dense 0-based vertex indices,
//! all-pairs BFS distances, and vertex subsets.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::VecDeque;
use std::fmt;

/// Distance value for vertices in different components.
///
/// Strictly greater than any finite hop count and absorbing under
/// [`dist_add`], so comparisons like `d >= 2` hold for disconnected pairs.
pub const INFINITY: u32 = u32::MAX;

/// Addition that keeps [`INFINITY`] absorbing.
#[inline]
pub fn dist_add(a: u32, b: u32) -> u32 {
    a.saturating_add(b)
}

const WORD_BITS: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// An immutable simple undirected graph.
///
/// Vertices are `0..n`. Adjacency is stored as one bit row per vertex,
/// which makes neighborhood comparisons and induced subgraphs cheap.
/// Equality is exact labeled equality of vertex count and edge set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops and
    /// out-of-range endpoints. Duplicate and mirrored pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![vec![0u64; words_for(n)]; n],
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.rows[u][v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.rows[v][u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u][v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(&self.rows[v])
    }

    /// All edges as pairs `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|&w| w == 0))
    }

    /// Breadth-first connectivity test. Graphs of order <= 1 are connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// True iff `N[u] = N[v]`. Rejects `u == v`.
    pub fn are_true_twins(&self, u: usize, v: usize) -> Result<bool> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, order: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self.closed_rows_equal(u, v))
    }

    fn closed_rows_equal(&self, u: usize, v: usize) -> bool {
        let words = words_for(self.n);
        for w in 0..words {
            let mut a = self.rows[u][w];
            let mut b = self.rows[v][w];
            if u / WORD_BITS == w {
                a |= 1 << (u % WORD_BITS);
            }
            if v / WORD_BITS == w {
                b |= 1 << (v % WORD_BITS);
            }
            if a != b {
                return false;
            }
        }
        true
    }

    /// True iff the graph contains at least one true twin pair.
    pub fn has_true_twins(&self) -> bool {
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.closed_rows_equal(u, v) {
                    return true;
                }
            }
        }
        false
    }

    /// Same vertex set, complemented edge set.
    pub fn complement(&self) -> Graph {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Drops all degree-0 vertices and reindexes densely.
    /// Returns the new graph and the map from new index to old index.
    pub fn remove_isolated(&self) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        self.induced_on(&keep)
    }

    /// Induced subgraph on a vertex subset, reindexed densely.
    /// Returns the new graph and the map from new index to old index.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        for &v in s.iter() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
            }
        }
        Ok(self.induced_on(s.as_slice()))
    }

    /// `verts` must be sorted ascending, in range, and duplicate-free.
    pub(crate) fn induced_on(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut g = Self::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, verts.to_vec())
    }

    /// Disjoint union with block-shifted vertex indices.
    pub fn disjoint_union(parts: &[Graph]) -> Graph {
        let n = parts.iter().map(|g| g.order()).sum();
        let mut out = Self::empty(n);
        let mut base = 0;
        for g in parts {
            for (u, v) in g.edges() {
                out.add_edge(base + u, base + v);
            }
            base += g.order();
        }
        out
    }

    /// All-pairs BFS hop distances.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut d = vec![INFINITY; n * n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            d[src * n + src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let du = d[src * n + u];
                for v in self.neighbors(u) {
                    if d[src * n + v] == INFINITY {
                        d[src * n + v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        let diameter = d.iter().copied().max().unwrap_or(0);
        DistanceMatrix { n, d, diameter }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            word_idx: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

/// All-pairs shortest-path distances of a graph, with its diameter.
///
/// Disconnected pairs carry [`INFINITY`]; the diameter is [`INFINITY`]
/// exactly when the graph is disconnected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        debug_assert!(u < self.n && v < self.n);
        self.d[u * self.n + v]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }
}

/// A subset of the vertices of some graph, kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Every vertex of `0..n`.
    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// The members of `0..n` not in this set.
    pub fn complement_in(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
