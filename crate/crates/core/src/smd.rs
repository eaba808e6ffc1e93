//! Strong metric dimension: resolver predicates, the exhaustive
//! brute-force oracle, and the vertex-cover pipeline over the strong
//! resolving graph.

use crate::boundary::strong_resolving_graph;
use crate::cover::vertex_cover;
use crate::error::{Error, Result};
use crate::graph::{dist_add, DistanceMatrix, Graph, VertexSet, INFINITY};
use itertools::Itertools;

/// Default order limit for [`smd_bruteforce`].
pub const BRUTE_FORCE_LIMIT: usize = 14;

/// True iff `w` strongly resolves `u` and `v`: some shortest `w`-`u` path
/// contains `v`, or some shortest `w`-`v` path contains `u`. Requires all
/// three distances finite.
pub fn strongly_resolves(dm: &DistanceMatrix, w: usize, u: usize, v: usize) -> Result<bool> {
    let (wu, wv, uv) = (dm.get(w, u), dm.get(w, v), dm.get(u, v));
    if wu == INFINITY || wv == INFINITY || uv == INFINITY {
        return Err(Error::Disconnected {
            what: "strong resolution",
        });
    }
    Ok(wu == dist_add(wv, uv) || wv == dist_add(wu, uv))
}

/// True iff every vertex pair of the connected graph `g` is strongly
/// resolved by some member of `s`.
pub fn is_strong_generator(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            what: "strong generators",
        });
    }
    let dm = g.distances();
    Ok(generates(&dm, g.order(), s.as_slice()))
}

fn generates(dm: &DistanceMatrix, n: usize, s: &[usize]) -> bool {
    for u in 0..n {
        for v in (u + 1)..n {
            let resolved = s.iter().any(|&w| {
                let (wu, wv, uv) = (dm.get(w, u), dm.get(w, v), dm.get(u, v));
                wu == wv + uv || wv == wu + uv
            });
            if !resolved {
                return false;
            }
        }
    }
    true
}

/// Exhaustive minimum strong metric generator, the project-wide oracle.
///
/// Subsets are tried in increasing size and lexicographically within each
/// size; the first success is returned, so ties break deterministically.
pub fn smd_bruteforce(g: &Graph) -> Result<(usize, VertexSet)> {
    smd_bruteforce_with_limit(g, BRUTE_FORCE_LIMIT)
}

pub fn smd_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<(usize, VertexSet)> {
    if g.order() > limit {
        return Err(Error::TooLarge {
            what: "brute-force strong metric dimension",
            order: g.order(),
            limit,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected {
            what: "strong metric dimension",
        });
    }
    let n = g.order();
    let dm = g.distances();
    for k in 0..=n {
        for subset in (0..n).combinations(k) {
            if generates(&dm, n, &subset) {
                return Ok((k, VertexSet::new(subset)));
            }
        }
    }
    unreachable!("the full vertex set is always a strong generator")
}

/// Strong metric dimension as the vertex cover number of the strong
/// resolving graph.
pub fn smd_via_sr(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            what: "strong metric dimension",
        });
    }
    let (sr, _) = strong_resolving_graph(g);
    Ok(vertex_cover(&sr).size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate_family, FamilySpec};
    use crate::products::{cartesian_product, corona, lexicographic_product};
    use std::collections::VecDeque;

    fn path(n: usize) -> Graph {
        generate_family(&FamilySpec::Path(n)).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        generate_family(&FamilySpec::Cycle(n)).unwrap()
    }

    /// Independent oracle: w strongly resolves {u, v} iff v lies on some
    /// shortest w-u path or u lies on some shortest w-v path, decided by
    /// explicit BFS distance recomputation from each endpoint.
    fn resolves_by_path_enumeration(g: &Graph, w: usize, u: usize, v: usize) -> bool {
        let bfs = |src: usize| {
            let mut d = vec![usize::MAX; g.order()];
            d[src] = 0;
            let mut q = VecDeque::from([src]);
            while let Some(x) = q.pop_front() {
                for y in g.neighbors(x) {
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            d
        };
        let dw = bfs(w);
        let du = bfs(u);
        let dv = bfs(v);
        // v on a shortest w-u path iff d(w,v) + d(v,u) = d(w,u).
        dw[v] + dv[u] == dw[u] || dw[u] + du[v] == dw[v]
    }

    #[test]
    fn middle_of_a_path_is_resolved_from_the_end() {
        let g = path(3);
        let dm = g.distances();
        assert_eq!(strongly_resolves(&dm, 0, 1, 2), Ok(true));
    }

    #[test]
    fn four_cycle_common_neighbor_resolves_nothing_antipodal() {
        // w = 1 is adjacent to both u = 0 and v = 2, which are antipodal.
        let g = cycle(4);
        let dm = g.distances();
        assert!(!resolves_by_path_enumeration(&g, 1, 0, 2));
        assert_eq!(strongly_resolves(&dm, 1, 0, 2), Ok(false));
    }

    #[test]
    fn resolver_agrees_with_path_enumeration_on_a_corpus() {
        for g in [path(5), cycle(6), Graph::complete(4), cartesian_product(&path(2), &path(3))] {
            let dm = g.distances();
            let n = g.order();
            for w in 0..n {
                for u in 0..n {
                    for v in (u + 1)..n {
                        assert_eq!(
                            strongly_resolves(&dm, w, u, v).unwrap(),
                            resolves_by_path_enumeration(&g, w, u, v),
                            "{g:?} w={w} u={u} v={v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_resolver_in_the_pair() {
        let g = cycle(5);
        let dm = g.distances();
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    assert_eq!(strongly_resolves(&dm, u, u, v), Ok(true));
                }
            }
        }
    }

    #[test]
    fn infinite_distance_is_rejected() {
        let dm = Graph::new(3, &[(0, 1)]).unwrap().distances();
        assert!(matches!(
            strongly_resolves(&dm, 0, 1, 2),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn whole_vertex_set_always_generates() {
        for g in [path(4), cycle(5), Graph::complete(4)] {
            assert_eq!(is_strong_generator(&g, &VertexSet::all(g.order())), Ok(true));
        }
    }

    #[test]
    fn one_path_endpoint_suffices() {
        let g = path(4);
        assert_eq!(is_strong_generator(&g, &VertexSet::new(vec![0])), Ok(true));
        assert_eq!(is_strong_generator(&g, &VertexSet::new(vec![1])), Ok(false));
    }

    #[test]
    fn one_vertex_is_not_enough_for_a_four_cycle() {
        let g = cycle(4);
        for v in 0..4 {
            assert_eq!(is_strong_generator(&g, &VertexSet::new(vec![v])), Ok(false));
        }
        assert_eq!(smd_bruteforce(&g).unwrap().0, 2);
    }

    #[test]
    fn generator_check_rejects_disconnected() {
        let g = Graph::empty(3);
        assert!(matches!(
            is_strong_generator(&g, &VertexSet::all(3)),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn brute_force_on_cycles_and_cliques() {
        assert_eq!(smd_bruteforce(&cycle(6)).unwrap().0, 3);
        assert_eq!(smd_bruteforce(&cycle(5)).unwrap().0, 3);
        assert_eq!(smd_bruteforce(&Graph::complete(4)).unwrap().0, 3);
    }

    #[test]
    fn brute_force_witness_is_lexicographically_first() {
        // For P_4 both endpoints work alone; {0} precedes {3}.
        let (k, basis) = smd_bruteforce(&path(4)).unwrap();
        assert_eq!(k, 1);
        assert_eq!(basis.as_slice(), &[0]);
    }

    #[test]
    fn brute_force_respects_the_order_limit() {
        let g = path(15);
        assert!(matches!(
            smd_bruteforce(&g),
            Err(Error::TooLarge { limit: 14, .. })
        ));
        assert_eq!(smd_bruteforce_with_limit(&g, 15).unwrap().0, 1);
    }

    #[test]
    fn pipeline_on_named_families() {
        assert_eq!(smd_via_sr(&cartesian_product(&path(2), &path(3))).unwrap(), 2);
        let octa = generate_family(&FamilySpec::CompleteMultipartite(vec![2, 2, 2])).unwrap();
        assert_eq!(smd_via_sr(&octa).unwrap(), 3);
    }

    #[test]
    fn pipeline_matches_brute_force_on_a_product() {
        let p = lexicographic_product(&path(4), &path(3)).unwrap();
        assert_eq!(smd_bruteforce(&p).unwrap().0, 6);
        assert_eq!(smd_via_sr(&p).unwrap(), 6);
    }

    #[test]
    fn basis_is_minimal() {
        for g in [path(5), cycle(6), Graph::complete(4), cartesian_product(&path(2), &path(2))] {
            let (k, basis) = smd_bruteforce(&g).unwrap();
            assert_eq!(k, basis.len());
            assert_eq!(is_strong_generator(&g, &basis), Ok(true));
            for &drop in basis.iter() {
                let smaller: VertexSet =
                    basis.iter().copied().filter(|&v| v != drop).collect();
                assert_eq!(is_strong_generator(&g, &smaller), Ok(false));
            }
        }
    }

    #[test]
    fn trees_have_dimension_leaves_minus_one() {
        // Exhaustive over Pruefer sequences for orders 3..=6.
        for n in 3..=6usize {
            let len = n - 2;
            let total = n.pow(len as u32);
            for code in 0..total {
                let mut seq = Vec::with_capacity(len);
                let mut c = code;
                for _ in 0..len {
                    seq.push(c % n);
                    c /= n;
                }
                let t = generate_family(&FamilySpec::TreeFromPruefer(seq)).unwrap();
                let leaves = (0..n).filter(|&v| t.degree(v) == 1).count();
                assert_eq!(smd_bruteforce(&t).unwrap().0, leaves - 1);
                assert_eq!(smd_via_sr(&t).unwrap(), leaves - 1);
            }
        }
    }

    #[test]
    fn corona_dimension_small_instances() {
        // For twin-free triangle-free copies with an edge and max degree
        // at most order minus two, dim_s(G corona H) = |G||H| - 2. With
        // edgeless copies the value is |G||H| - 1 instead.
        let with_edge = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
        let g = corona(&path(2), &with_edge).unwrap();
        assert_eq!(smd_bruteforce(&g).unwrap().0, 6);
        assert_eq!(smd_via_sr(&g).unwrap(), 6);

        let edgeless = corona(&path(2), &Graph::empty(2)).unwrap();
        assert_eq!(smd_bruteforce(&edgeless).unwrap().0, 3);
        assert_eq!(smd_via_sr(&edgeless).unwrap(), 3);
    }
}
