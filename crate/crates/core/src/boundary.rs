//! Maximal distance, mutual maximal distance, the boundary, the strong
//! resolving graph, the star transform, and their twin-filtered variants.
//!
//! Vertices in different components are treated as mutually maximally
//! distant: the [`INFINITY`](crate::graph::INFINITY) distance sentinel makes
//! the defining inequality hold with no special cases.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, VertexSet};
use serde::Serialize;

/// The mutually-maximally-distant pairs of a graph and the vertices
/// participating in at least one such pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MmdReport {
    /// Unordered MMD pairs, each as `(u, v)` with `u < v`, ascending.
    pub pairs: Vec<(usize, usize)>,
    /// The boundary: every vertex occurring in some MMD pair.
    pub boundary: VertexSet,
}

/// True iff `u` is maximally distant from `v`: no neighbor of `u` is
/// farther from `v` than `u` itself.
pub fn is_maximally_distant(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> bool {
    let duv = dm.get(u, v);
    g.neighbors(u).all(|w| dm.get(v, w) <= duv)
}

fn mutually_maximally_distant(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> bool {
    is_maximally_distant(g, dm, u, v) && is_maximally_distant(g, dm, v, u)
}

/// Enumerates all MMD pairs and the boundary.
pub fn mmd_report(g: &Graph) -> MmdReport {
    let dm = g.distances();
    mmd_report_with(g, &dm)
}

pub fn mmd_report_with(g: &Graph, dm: &DistanceMatrix) -> MmdReport {
    let n = g.order();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if mutually_maximally_distant(g, dm, u, v) {
                pairs.push((u, v));
            }
        }
    }
    let boundary: VertexSet = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    MmdReport { pairs, boundary }
}

/// The strong resolving graph: vertex set is the boundary, edges are the
/// MMD pairs. Isolated boundary vertices cannot occur, since membership
/// requires an MMD partner. Returns the graph and the map from its
/// indices back to vertices of `g`.
pub fn strong_resolving_graph(g: &Graph) -> (Graph, Vec<usize>) {
    let report = mmd_report(g);
    reindex(&report.boundary, &report.pairs)
}

fn reindex(verts: &VertexSet, pairs: &[(usize, usize)]) -> (Graph, Vec<usize>) {
    let map: Vec<usize> = verts.as_slice().to_vec();
    let position = |v: usize| map.binary_search(&v).expect("pair endpoint is in the vertex set");
    let edges: Vec<_> = pairs.iter().map(|&(u, v)| (position(u), position(v))).collect();
    let graph = Graph::new(map.len(), &edges).expect("reindexed edges are valid");
    (graph, map)
}

/// The star transform: same vertex set, `u ~ v` iff `d(u, v) >= 2` or
/// `u, v` are true twins. Disconnected inputs are fine, the INFINITY
/// sentinel satisfies `d >= 2`.
pub fn star_transform(g: &Graph) -> Graph {
    let n = g.order();
    let dm = g.distances();
    let mut out = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if dm.get(u, v) >= 2 || g.are_true_twins(u, v).expect("u != v") {
                out.add_edge(u, v);
            }
        }
    }
    out
}

/// The twin-filtered boundary: vertices with an MMD partner that is not a
/// true twin. Defined only for non-complete graphs.
pub fn tf_boundary(g: &Graph) -> Result<VertexSet> {
    Ok(tf_pairs(g)?.1)
}

/// The strong resolving TF-graph: vertex set is the TF-boundary, edges are
/// the MMD pairs that are not true twin pairs. Defined only for
/// non-complete graphs. Returns the graph and the index map into `g`.
pub fn strong_resolving_tf_graph(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let (pairs, verts) = tf_pairs(g)?;
    Ok(reindex(&verts, &pairs))
}

fn tf_pairs(g: &Graph) -> Result<(Vec<(usize, usize)>, VertexSet)> {
    if g.is_complete() {
        return Err(Error::CompleteGraph {
            what: "the TF-boundary",
        });
    }
    let dm = g.distances();
    let report = mmd_report_with(g, &dm);
    let pairs: Vec<_> = report
        .pairs
        .iter()
        .copied()
        .filter(|&(u, v)| !g.are_true_twins(u, v).expect("u != v"))
        .collect();
    let verts: VertexSet = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    Ok((pairs, verts))
}
