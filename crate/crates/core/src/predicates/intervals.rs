//! Interval-shape predicates and interval-based separation conditions.

use super::conditions::conv_hull;
use crate::metric::MetricOracle;

/// Every x in I(u,v) has an antipode y with I(x,y) = I(u,v).
pub fn antipodal_interval(m: &MetricOracle, u: usize, v: usize) -> bool {
    let n = m.n();
    (0..n).filter(|&x| m.between(u, x, v)).all(|x| {
        (0..n).any(|y| (0..n).all(|z| m.between(u, z, v) == m.between(x, z, y)))
    })
}

/// Every vertex has a gate in I(u,v): a member lying between it and all
/// members.
pub fn gated_interval(m: &MetricOracle, u: usize, v: usize) -> bool {
    let n = m.n();
    (0..n).all(|x| {
        (0..n).any(|g| {
            m.between(u, g, v)
                && (0..n).filter(|&y| m.between(u, y, v)).all(|y| m.between(x, g, y))
        })
    })
}

/// I(u,v) is median-closed and thick: medians of members stay inside, and
/// members at distance two have two common neighbors.
pub fn cube_interval(m: &MetricOracle, u: usize, v: usize) -> bool {
    let n = m.n();
    let members: Vec<usize> = (0..n).filter(|&x| m.between(u, x, v)).collect();
    let median_closed = members.iter().all(|&x| {
        members.iter().all(|&y| {
            members.iter().all(|&z| {
                (0..n).any(|w| {
                    m.between(x, w, y)
                        && m.between(x, w, z)
                        && m.between(y, w, z)
                        && m.between(u, w, v)
                })
            })
        })
    });
    if !median_closed {
        return false;
    }
    members.iter().all(|&x| {
        members.iter().all(|&y| {
            m.dist(x, y) != 2
                || (0..n).any(|a| {
                    (0..n).any(|b| {
                        a != b && m.edge(a, x) && m.edge(a, y) && m.edge(b, x) && m.edge(b, y)
                    })
                })
        })
    })
}

/// Every vertex has an antipode whose interval covers the whole graph.
pub fn is_antipodal_graph(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    (0..n)
        .find(|&x| !(0..n).any(|y| (0..n).all(|z| m.between(x, z, y))))
        .map(|x| vec![x])
}

/// Every 2-interval contains two non-adjacent interior vertices.
pub fn is_thick(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            if m.dist(u, v) != 2 {
                continue;
            }
            let interior: Vec<usize> = (0..n)
                .filter(|&x| x != u && x != v && m.between(u, x, v))
                .collect();
            let ok = interior
                .iter()
                .enumerate()
                .any(|(i, &x)| interior[i + 1..].iter().any(|&y| !m.edge(x, y)));
            if !ok {
                return Some(vec![u, v]);
            }
        }
    }
    None
}

/// x in I(w,u) and y in I(w,v) force a common point of I(u,y) and I(v,x).
pub fn pasch(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for x in 0..n {
                    if !m.between(u, x, w) {
                        continue;
                    }
                    for y in 0..n {
                        if !m.between(v, y, w) {
                            continue;
                        }
                        let ok =
                            (0..n).any(|z| m.between(u, z, y) && m.between(v, z, x));
                        if !ok {
                            return Some(vec![u, v, w, x, y]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// x in I(v,w), y in I(u,x) force z in I(u,v) with y in I(w,z).
pub fn peano(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for x in 0..n {
                    if !m.between(v, x, w) {
                        continue;
                    }
                    for y in 0..n {
                        if !m.between(u, y, x) {
                            continue;
                        }
                        let ok =
                            (0..n).any(|z| m.between(u, z, v) && m.between(w, y, z));
                        if !ok {
                            return Some(vec![u, v, w, x, y]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// y in I(u,u') and I(v,v'), x in I(u,v) force x' in I(u',v') with y in
/// I(x,x').
pub fn sand_glass(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            for up in 0..n {
                for vp in 0..n {
                    for y in 0..n {
                        if !m.between(u, y, up) || !m.between(v, y, vp) {
                            continue;
                        }
                        for x in 0..n {
                            if !m.between(u, x, v) {
                                continue;
                            }
                            let ok = (0..n)
                                .any(|xp| m.between(up, xp, vp) && m.between(x, y, xp));
                            if !ok {
                                return Some(vec![u, v, up, vp, x, y]);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Every interval is convex.
pub fn convex_intervals(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            for x in 0..n {
                if !m.between(u, x, v) {
                    continue;
                }
                for y in 0..n {
                    if !m.between(u, y, v) {
                        continue;
                    }
                    for z in 0..n {
                        if m.between(x, z, y) && !m.between(u, z, v) {
                            return Some(vec![u, v, x, y, z]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// conv(u,v,w) equals the union of the three pairwise intervals.
pub fn triangle_hulls_flat(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let hull = conv_hull(m, &[u, v, w]);
                let flat: Vec<usize> = (0..n)
                    .filter(|&z| {
                        m.between(u, z, v) || m.between(v, z, w) || m.between(w, z, u)
                    })
                    .collect();
                if hull != flat {
                    return Some(vec![u, v, w]);
                }
            }
        }
    }
    None
}

/// I(u,v) is contained in I(u,w) union I(w,v).
pub fn interval_inclusion(m: &MetricOracle, u: usize, v: usize, w: usize) -> bool {
    (0..m.n())
        .filter(|&x| m.between(u, x, v))
        .all(|x| m.between(u, x, w) || m.between(w, x, v))
}

/// At least two of the three interval inclusions hold for every triple.
pub fn distance_hereditary_intervals(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let a = interval_inclusion(m, u, v, w);
                let b = interval_inclusion(m, u, w, v);
                let c = interval_inclusion(m, v, w, u);
                if (a as u8) + (b as u8) + (c as u8) < 2 {
                    return Some(vec![u, v, w]);
                }
            }
        }
    }
    None
}

/// The ptolemaic inequality over all 4-tuples.
pub fn ptolemaic_inequality(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            for x in 0..n {
                for y in 0..n {
                    let lhs = m.dist(u, v) * m.dist(x, y);
                    let rhs = m.dist(u, x) * m.dist(v, y) + m.dist(u, y) * m.dist(v, x);
                    if lhs > rhs {
                        return Some(vec![u, v, x, y]);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;
    use crate::metric::MetricOracle;

    fn oracle(g: Graph) -> MetricOracle {
        MetricOracle::new(g).unwrap()
    }

    /// 4-wheel (hub 0, rim 1-4) plus a vertex 5 adjacent to rim vertices 1,2.
    fn wheel_plus_pendant() -> Graph {
        Graph::new(
            6,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1), (5, 1), (5, 2)],
        )
        .unwrap()
    }

    #[test]
    fn cube_antipodal_and_cube_interval() {
        let m = oracle(families::hypercube(3).unwrap());
        assert!(antipodal_interval(&m, 0, 7));
        assert!(cube_interval(&m, 0, 7));
        assert!(gated_interval(&m, 0, 7));
    }

    #[test]
    fn antipodal_graphs() {
        assert_eq!(is_antipodal_graph(&oracle(families::cycle(6).unwrap())), None);
        assert_eq!(
            is_antipodal_graph(&oracle(families::path(3).unwrap())),
            Some(vec![1])
        );
    }

    #[test]
    fn tree_intervals_are_gated() {
        let m = oracle(families::random_tree(7, 1).unwrap());
        for u in 0..7 {
            for v in 0..7 {
                assert!(gated_interval(&m, u, v));
            }
        }
    }

    #[test]
    fn thickness() {
        assert_eq!(is_thick(&oracle(families::hypercube(3).unwrap())), None);
        assert_eq!(is_thick(&oracle(families::path(3).unwrap())), Some(vec![0, 2]));
        assert_eq!(is_thick(&oracle(families::johnson(4, 2).unwrap())), None);
    }

    #[test]
    fn pasch_peano_on_trees() {
        let m = oracle(families::random_tree(7, 5).unwrap());
        assert_eq!(pasch(&m), None);
        assert_eq!(peano(&m), None);
    }

    #[test]
    fn separation_example_pasch_but_not_peano() {
        let m = oracle(wheel_plus_pendant());
        assert_eq!(pasch(&m), None);
        assert!(peano(&m).is_some());
    }

    #[test]
    fn convex_intervals_of_cycles() {
        assert_eq!(convex_intervals(&oracle(families::cycle(5).unwrap())), None);
        assert_eq!(convex_intervals(&oracle(families::cycle(6).unwrap())), None);
        // in K23 the interval between two degree-2 vertices is not convex
        assert!(convex_intervals(&oracle(families::complete_bipartite(2, 3).unwrap())).is_some());
    }

    #[test]
    fn cellular_union_condition() {
        assert_eq!(triangle_hulls_flat(&oracle(families::cycle(6).unwrap())), None);
        assert!(triangle_hulls_flat(&oracle(families::hypercube(3).unwrap())).is_some());
    }

    #[test]
    fn distance_hereditary_checks() {
        assert_eq!(distance_hereditary_intervals(&oracle(families::complete(4).unwrap())), None);
        assert_eq!(distance_hereditary_intervals(&oracle(families::star(5).unwrap())), None);
        assert!(distance_hereditary_intervals(&oracle(families::house())).is_some());
        assert!(distance_hereditary_intervals(&oracle(families::cycle(5).unwrap())).is_some());
    }

    #[test]
    fn ptolemaic_inequality_checks() {
        assert_eq!(ptolemaic_inequality(&oracle(families::complete(4).unwrap())), None);
        assert!(ptolemaic_inequality(&oracle(families::cycle(4).unwrap())).is_some());
    }
}
