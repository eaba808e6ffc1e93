//! Named graph family generators with canonical vertex order.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named small-graph family and its size parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path P_n in walk order 0-1-..-(n-1).
    Path(usize),
    /// Cycle C_n in walk order, closing edge (n-1, 0). Requires n >= 3.
    Cycle(usize),
    /// Complete graph K_n.
    Complete(usize),
    /// Edgeless graph N_n.
    Empty(usize),
    /// Complete multipartite graph with contiguous parts of the given sizes.
    CompleteMultipartite(Vec<usize>),
    /// Grid P_r x P_t (Cartesian product of two paths), row-major.
    Grid(usize, usize),
    /// Star K_{1,l}: center 0, leaves 1..=l.
    Star(usize),
    /// The tree decoded from a Pruefer sequence; a sequence of length m
    /// yields the tree on m + 2 vertices.
    TreeFromPruefer(Vec<usize>),
}

pub fn generate_family(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path(n) => {
            require(*n >= 1, "path order must be >= 1")?;
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::new(*n, &edges)
        }
        FamilySpec::Cycle(n) => {
            require(*n >= 3, "cycle order must be >= 3")?;
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((n - 1, 0));
            Graph::new(*n, &edges)
        }
        FamilySpec::Complete(n) => {
            require(*n >= 1, "complete graph order must be >= 1")?;
            Ok(Graph::complete(*n))
        }
        FamilySpec::Empty(n) => {
            require(*n >= 1, "empty graph order must be >= 1")?;
            Ok(Graph::empty(*n))
        }
        FamilySpec::CompleteMultipartite(parts) => {
            require(!parts.is_empty(), "multipartite needs at least one part")?;
            require(parts.iter().all(|&p| p >= 1), "each part must be >= 1")?;
            let n: usize = parts.iter().sum();
            let mut g = Graph::empty(n);
            let mut starts = Vec::with_capacity(parts.len());
            let mut acc = 0;
            for &p in parts {
                starts.push(acc);
                acc += p;
            }
            for (i, &pi) in parts.iter().enumerate() {
                for (j, &pj) in parts.iter().enumerate().skip(i + 1) {
                    for u in starts[i]..starts[i] + pi {
                        for v in starts[j]..starts[j] + pj {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
            Ok(g)
        }
        FamilySpec::Grid(r, t) => {
            require(*r >= 1 && *t >= 1, "grid sides must be >= 1")?;
            let path = |n: usize| generate_family(&FamilySpec::Path(n));
            Ok(crate::products::cartesian_product(&path(*r)?, &path(*t)?))
        }
        FamilySpec::Star(leaves) => {
            require(*leaves >= 1, "star needs at least one leaf")?;
            let edges: Vec<_> = (1..=*leaves).map(|v| (0, v)).collect();
            Graph::new(leaves + 1, &edges)
        }
        FamilySpec::TreeFromPruefer(seq) => tree_from_pruefer(seq),
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidFamily(msg.into()))
    }
}

/// Standard Pruefer decoding: repeatedly join the smallest remaining leaf
/// to the next sequence entry, then join the last two remaining vertices.
fn tree_from_pruefer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidFamily(format!(
            "pruefer entry {bad} out of range for a tree on {n} vertices"
        )));
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    debug_assert_eq!(rest.len(), 2);
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges)
}
