//! Small-graph isomorphism by iterated degree refinement plus
//! color-respecting backtracking search.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeMap;

/// Hard order limit for [`is_isomorphic`].
pub const ISO_ORDER_LIMIT: usize = 16;

/// Decides whether an edge-preserving bijection between `g` and `h` exists.
///
/// Rejects inputs above [`ISO_ORDER_LIMIT`] vertices; the search is a
/// pruned permutation backtracking and is only meant for desk-scale graphs.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > ISO_ORDER_LIMIT {
            return Err(Error::TooLarge {
                what: "isomorphism test",
                order: x.order(),
                limit: ISO_ORDER_LIMIT,
            });
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let n = g.order();
    if n == 0 {
        return Ok(true);
    }

    let (gc, hc) = match joint_refinement(g, h) {
        Some(pair) => pair,
        None => return Ok(false),
    };

    // Map vertices of g in an order that fixes rare colors first.
    let mut order: Vec<usize> = (0..n).collect();
    let mut class_size = BTreeMap::new();
    for &c in &gc {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    order.sort_by_key(|&v| (class_size[&gc[v]], gc[v], v));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g, h, &gc, &hc, &order, 0, &mut mapping, &mut used))
}

/// Runs color refinement on both graphs with a shared color table, so the
/// resulting classes are comparable. Returns `None` when the color
/// histograms diverge, which already rules out isomorphism.
fn joint_refinement(g: &Graph, h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let mut gc: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut hc: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    for _ in 0..n {
        let mut table: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut next = |key: (usize, Vec<usize>), table: &mut BTreeMap<_, usize>| {
            let id = table.len();
            *table.entry(key).or_insert(id)
        };
        let signature = |x: &Graph, colors: &[usize], v: usize| {
            let mut sig: Vec<usize> = x.neighbors(v).map(|u| colors[u]).collect();
            sig.sort_unstable();
            (colors[v], sig)
        };
        let new_gc: Vec<usize> = (0..n)
            .map(|v| next(signature(g, &gc, v), &mut table))
            .collect();
        let new_hc: Vec<usize> = (0..n)
            .map(|v| next(signature(h, &hc, v), &mut table))
            .collect();
        if histogram(&new_gc) != histogram(&new_hc) {
            return None;
        }
        let stable = class_count(&new_gc) == class_count(&gc);
        gc = new_gc;
        hc = new_hc;
        if stable {
            break;
        }
    }
    Some((gc, hc))
}

fn histogram(colors: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &c in colors {
        *m.entry(c).or_insert(0usize) += 1;
    }
    m
}

fn class_count(colors: &[usize]) -> usize {
    histogram(colors).len()
}

fn extend(
    g: &Graph,
    h: &Graph,
    gc: &[usize],
    hc: &[usize],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for w in 0..h.order() {
        if used[w] || hc[w] != gc[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&p| g.has_edge(u, p) == h.has_edge(w, mapping[p]));
        if !consistent {
            continue;
        }
        mapping[u] = w;
        used[w] = true;
        if extend(g, h, gc, hc, order, depth + 1, mapping, used) {
            return true;
        }
        used[w] = false;
        mapping[u] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((n - 1, 0));
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn four_cycles_in_disguise() {
        // C_4 written with a different labeling.
        let a = cycle(4);
        let b = Graph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(is_isomorphic(&a, &b), Ok(true));
    }

    #[test]
    fn path_vs_triangle() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(is_isomorphic(&p3, &Graph::complete(3)), Ok(false));
    }

    #[test]
    fn same_degree_sequence_different_graphs() {
        // C_6 vs two triangles: both 2-regular on 6 vertices.
        let two_triangles =
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(is_isomorphic(&cycle(6), &two_triangles), Ok(false));
    }

    #[test]
    fn order_limit_is_enforced() {
        let g = Graph::empty(17);
        assert!(matches!(
            is_isomorphic(&g, &Graph::empty(17)),
            Err(Error::TooLarge { limit: 16, .. })
        ));
    }

    #[test]
    fn empty_graphs_match() {
        assert_eq!(is_isomorphic(&Graph::empty(0), &Graph::empty(0)), Ok(true));
        assert_eq!(is_isomorphic(&Graph::empty(3), &Graph::empty(3)), Ok(true));
        assert_eq!(is_isomorphic(&Graph::empty(3), &Graph::empty(2)), Ok(false));
    }

    #[test]
    fn petersen_is_isomorphic_to_kneser_relabeling() {
        let petersen = Graph::new(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap();
        let relabel = [3, 8, 1, 0, 9, 4, 7, 2, 6, 5];
        let shuffled: Vec<_> = petersen
            .edges()
            .iter()
            .map(|&(u, v)| (relabel[u], relabel[v]))
            .collect();
        let other = Graph::new(10, &shuffled).unwrap();
        assert_eq!(is_isomorphic(&petersen, &other), Ok(true));
    }
}
