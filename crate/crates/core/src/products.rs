//! Graph products and the join: lexicographic, Cartesian, join, corona.
//!
//! Product vertices are indexed row-major in the first factor, so a pair
//! `(a, x)` sits at flat index `a * |V(H)| + x`. Tests can therefore pin
//! explicit labeled edge sets instead of arguing up to isomorphism.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex `(a, x)` of a two-factor product, with `a` in the first factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductVertex {
    pub a: usize,
    pub x: usize,
}

impl ProductVertex {
    /// Flat index under row-major order, `h_order` = order of the second factor.
    pub fn flat(self, h_order: usize) -> usize {
        self.a * h_order + self.x
    }

    pub fn from_flat(index: usize, h_order: usize) -> Self {
        ProductVertex {
            a: index / h_order,
            x: index % h_order,
        }
    }
}

/// Lexicographic product: `(a,x) ~ (c,y)` iff `a ~ c` in `g`, or `a = c`
/// and `x ~ y` in `h`. Both factors must be non-empty.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::Precondition(
            "lexicographic product requires non-empty factors".into(),
        ));
    }
    let (n, np) = (g.order(), h.order());
    let mut out = Graph::empty(n * np);
    for a in 0..n {
        for (x, y) in h.edges() {
            out.add_edge(a * np + x, a * np + y);
        }
    }
    for (a, c) in g.edges() {
        for x in 0..np {
            for y in 0..np {
                out.add_edge(a * np + x, c * np + y);
            }
        }
    }
    Ok(out)
}

/// Cartesian (box) product: adjacent iff equal in one coordinate and
/// adjacent in the other.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (n, np) = (g.order(), h.order());
    let mut out = Graph::empty(n * np);
    for a in 0..n {
        for (x, y) in h.edges() {
            out.add_edge(a * np + x, a * np + y);
        }
    }
    for (a, c) in g.edges() {
        for x in 0..np {
            out.add_edge(a * np + x, c * np + x);
        }
    }
    out
}

/// Join: disjoint union plus every cross edge. Vertices of `g` come first.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (n, np) = (g.order(), h.order());
    let mut out = Graph::disjoint_union(&[g.clone(), h.clone()]);
    for u in 0..n {
        for v in 0..np {
            out.add_edge(u, n + v);
        }
    }
    out
}

/// Corona: one copy of `h` per vertex of `g`, copy `i` fully joined to
/// vertex `i`. Copy `i` occupies indices `n + i*|V(h)| .. n + (i+1)*|V(h)|`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 {
        return Err(Error::Precondition(
            "corona requires a non-empty first factor".into(),
        ));
    }
    let (n, np) = (g.order(), h.order());
    let mut out = Graph::empty(n * (1 + np));
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for i in 0..n {
        let base = n + i * np;
        for (x, y) in h.edges() {
            out.add_edge(base + x, base + y);
        }
        for x in 0..np {
            out.add_edge(i, base + x);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate_family, FamilySpec};
    use crate::iso::is_isomorphic;

    fn path(n: usize) -> Graph {
        generate_family(&FamilySpec::Path(n)).unwrap()
    }

    #[test]
    fn product_vertex_flat_roundtrip() {
        let v = ProductVertex { a: 2, x: 1 };
        assert_eq!(v.flat(3), 7);
        assert_eq!(ProductVertex::from_flat(7, 3), v);
    }

    #[test]
    fn lex_k2_by_n2_is_a_four_cycle() {
        let p = lexicographic_product(&Graph::complete(2), &Graph::empty(2)).unwrap();
        let c4 = generate_family(&FamilySpec::Cycle(4)).unwrap();
        assert_eq!(is_isomorphic(&p, &c4), Ok(true));
    }

    #[test]
    fn lex_p4_by_p3_explicit_edge_set() {
        // Columns a..d each carry a P_3; consecutive columns are fully joined.
        let p = lexicographic_product(&path(4), &path(3)).unwrap();
        assert_eq!(p.order(), 12);
        let mut expected = Vec::new();
        for col in 0..4 {
            expected.push((3 * col, 3 * col + 1));
            expected.push((3 * col + 1, 3 * col + 2));
        }
        for col in 0..3 {
            for x in 0..3 {
                for y in 0..3 {
                    let (u, v) = (3 * col + x, 3 * (col + 1) + y);
                    expected.push((u.min(v), u.max(v)));
                }
            }
        }
        expected.sort_unstable();
        assert_eq!(p.edges(), expected);
    }

    #[test]
    fn lex_complete_by_edgeless_is_multipartite() {
        for n in 2..=4 {
            for np in 2..=4 {
                let p = lexicographic_product(&Graph::complete(n), &Graph::empty(np)).unwrap();
                let parts = vec![np; n];
                let k = generate_family(&FamilySpec::CompleteMultipartite(parts)).unwrap();
                assert_eq!(p, k, "K_{n} o N_{np}");
            }
        }
    }

    #[test]
    fn lex_rejects_empty_factor() {
        assert!(lexicographic_product(&Graph::empty(0), &Graph::complete(2)).is_err());
    }

    #[test]
    fn join_of_point_and_path_is_a_fan() {
        let f = join(&Graph::complete(1), &path(4));
        assert_eq!(f.order(), 5);
        assert_eq!(f.max_degree(), 4);
        assert_eq!(f.degree(0), 4);
    }

    #[test]
    fn join_of_two_points_is_an_edge() {
        assert_eq!(join(&Graph::empty(1), &Graph::empty(1)), Graph::complete(2));
    }

    #[test]
    fn corona_point_with_edge_is_a_triangle() {
        let g = corona(&Graph::complete(1), &Graph::complete(2)).unwrap();
        assert_eq!(is_isomorphic(&g, &Graph::complete(3)), Ok(true));
    }

    #[test]
    fn corona_edge_with_edge_counts() {
        let g = corona(&Graph::complete(2), &Graph::complete(2)).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 7);
        // Copy layout: copy 0 at {2,3}, copy 1 at {4,5}.
        assert!(g.has_edge(0, 2) && g.has_edge(0, 3));
        assert!(g.has_edge(1, 4) && g.has_edge(1, 5));
        assert!(!g.has_edge(0, 4));
    }

    #[test]
    fn corona_rejects_empty_base() {
        assert!(corona(&Graph::empty(0), &Graph::complete(2)).is_err());
    }

    #[test]
    fn cartesian_square_is_a_four_cycle() {
        let g = cartesian_product(&path(2), &path(2));
        let c4 = generate_family(&FamilySpec::Cycle(4)).unwrap();
        assert_eq!(is_isomorphic(&g, &c4), Ok(true));
    }

    #[test]
    fn cartesian_grid_counts() {
        let g = cartesian_product(&path(2), &path(3));
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 7);
        for (r, t) in [(2, 2), (3, 4), (4, 5)] {
            assert_eq!(cartesian_product(&path(r), &path(t)).order(), r * t);
        }
    }
}
