//! Exact minimum vertex cover by branch and bound, and the independence
//! and clique numbers derived from it.
//!
//! Branching is on a maximum-degree vertex: either it joins the cover, or
//! all of its neighbors do. Degree-0 and degree-1 reductions shrink each
//! subproblem, a greedy cover seeds the upper bound, and a greedy maximal
//! matching gives the lower bound for pruning. All tie-breaks are by
//! ascending vertex index, so the returned witness is reproducible.

use crate::graph::{Graph, VertexSet};
use serde::Serialize;

/// An exact minimum vertex cover and its size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub size: usize,
    pub witness: VertexSet,
}

/// Computes an exact minimum vertex cover.
pub fn vertex_cover(g: &Graph) -> CoverResult {
    let n = g.order();
    let mut state = State {
        adj: (0..n)
            .map(|v| g.neighbors(v).collect::<Vec<_>>())
            .map(RowSet::from_sorted)
            .collect(),
        n,
    };
    // Greedy max-degree cover as the initial incumbent.
    let mut greedy_state = state.clone();
    let mut greedy = Vec::new();
    while let Some(v) = greedy_state.max_degree_vertex() {
        greedy.push(v);
        greedy_state.remove_vertex(v);
    }
    let mut best = greedy;

    let mut chosen = Vec::new();
    branch(&mut state, &mut chosen, &mut best);

    best.sort_unstable();
    debug_assert!(covers_all_edges(g, &best));
    CoverResult {
        size: best.len(),
        witness: VertexSet::new(best),
    }
}

/// Independence number via the Gallai identity `alpha + beta = n`; the
/// complement of a minimum cover witness is a maximum independent set.
pub fn independence_number(g: &Graph) -> usize {
    g.order() - vertex_cover(g).size
}

/// Clique number as the independence number of the complement.
pub fn clique_number(g: &Graph) -> usize {
    independence_number(&g.complement())
}

fn covers_all_edges(g: &Graph, cover: &[usize]) -> bool {
    let set: std::collections::HashSet<_> = cover.iter().copied().collect();
    g.edges().iter().all(|&(u, v)| set.contains(&u) || set.contains(&v))
}

/// Mutable neighbor bitset used inside the search.
#[derive(Clone)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn from_sorted(vals: Vec<usize>) -> Self {
        let max = vals.last().map_or(0, |&v| v + 1);
        let mut words = vec![0u64; max.div_ceil(64)];
        for v in vals {
            words[v / 64] |= 1 << (v % 64);
        }
        RowSet(words)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn clear(&mut self, v: usize) {
        if v / 64 < self.0.len() {
            self.0[v / 64] &= !(1 << (v % 64));
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

#[derive(Clone)]
struct State {
    adj: Vec<RowSet>,
    n: usize,
}

impl State {
    fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    fn max_degree_vertex(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..self.n {
            let d = self.degree(v);
            if d > 0 && best.map_or(true, |(bd, _)| d > bd) {
                best = Some((d, v));
            }
        }
        best.map(|(_, v)| v)
    }

    fn remove_vertex(&mut self, v: usize) {
        let nbrs: Vec<usize> = self.adj[v].iter().collect();
        for u in nbrs {
            self.adj[u].clear(v);
        }
        self.adj[v] = RowSet(Vec::new());
    }

    /// Greedy maximal matching size: every matched edge needs a distinct
    /// cover vertex, so this is a valid lower bound.
    fn matching_lower_bound(&self) -> usize {
        let mut taken = vec![false; self.n];
        let mut size = 0;
        for u in 0..self.n {
            if taken[u] {
                continue;
            }
            if let Some(v) = self.adj[u].iter().find(|&v| !taken[v]) {
                taken[u] = true;
                taken[v] = true;
                size += 1;
            }
        }
        size
    }

    /// Applies degree-1 reductions exhaustively: the neighbor of a
    /// pendant vertex always belongs to some minimum cover.
    fn reduce(&mut self, chosen: &mut Vec<usize>) {
        loop {
            let mut changed = false;
            for v in 0..self.n {
                if self.degree(v) == 1 {
                    let u = self.adj[v].first().expect("degree 1");
                    chosen.push(u);
                    self.remove_vertex(u);
                    changed = true;
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn has_edges(&self) -> bool {
        self.adj.iter().any(|r| r.count() > 0)
    }
}

fn branch(state: &mut State, chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
    let depth_before = chosen.len();
    state.reduce(chosen);

    if !state.has_edges() {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        chosen.truncate(depth_before);
        return;
    }

    if chosen.len() + state.matching_lower_bound() >= best.len() {
        chosen.truncate(depth_before);
        return;
    }

    let v = state.max_degree_vertex().expect("edges remain");

    // Branch 1: v joins the cover.
    let mut with_v = state.clone();
    with_v.remove_vertex(v);
    chosen.push(v);
    branch(&mut with_v, chosen, best);
    chosen.pop();

    // Branch 2: v stays out, so all its neighbors join.
    let nbrs: Vec<usize> = state.adj[v].iter().collect();
    let mut without_v = state.clone();
    for &u in &nbrs {
        chosen.push(u);
        without_v.remove_vertex(u);
    }
    branch(&mut without_v, chosen, best);
    chosen.truncate(depth_before);
}
