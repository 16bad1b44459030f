//! Whole-graph metric conditions, each returning the lexicographically
//! least counterexample tuple (in the same variable order as the matching
//! formula) or `None` when the condition holds.

use crate::metric::MetricOracle;

/// Triangle condition: adjacent vertices equidistant from v have a common
/// neighbor on both geodesics to v.
pub fn tc(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for v in 0..n {
        for x in 0..n {
            for y in 0..n {
                if !m.edge(x, y) || m.dist(v, x) != m.dist(v, y) {
                    continue;
                }
                let ok = (0..n).any(|z| {
                    m.edge(x, z) && m.edge(y, z) && m.between(x, z, v) && m.between(y, z, v)
                });
                if !ok {
                    return Some(vec![v, x, y]);
                }
            }
        }
    }
    None
}

/// Quadrangle condition: the configuration u ~ x,y with x,y one step closer
/// to v closes into a square toward v.
pub fn qc(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for v in 0..n {
        for x in 0..n {
            for y in 0..n {
                if x == y || m.edge(x, y) || m.dist(v, x) != m.dist(v, y) {
                    continue;
                }
                for u in 0..n {
                    if !m.edge(u, x) || !m.edge(u, y) || m.dist(v, u) != m.dist(v, x) + 1 {
                        continue;
                    }
                    let ok = (0..n).any(|z| {
                        z != u
                            && m.edge(x, z)
                            && m.edge(y, z)
                            && !m.edge(u, z)
                            && m.between(x, z, v)
                            && m.between(y, z, v)
                    });
                    if !ok {
                        return Some(vec![v, x, y, u]);
                    }
                }
            }
        }
    }
    None
}

/// Triangle-pentagon condition: equidistant adjacent pairs close via a
/// triangle or an induced pentagon with a far apex.
pub fn tpc(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for v in 0..n {
        for x in 0..n {
            for y in 0..n {
                if tpc_fails_at(m, v, x, y) {
                    return Some(vec![v, x, y]);
                }
            }
        }
    }
    None
}

/// The triple (v,x,y) matches the antecedent and has neither closure.
pub fn tpc_fails_at(m: &MetricOracle, v: usize, x: usize, y: usize) -> bool {
    let n = m.n();
    if !m.edge(x, y) || m.dist(v, x) != m.dist(v, y) {
        return false;
    }
    let tri = (0..n)
        .any(|z| m.edge(x, z) && m.edge(y, z) && m.between(x, z, v) && m.between(y, z, v));
    if tri {
        return false;
    }
    for z in 0..n {
        if m.dist(x, z) != 2 || m.dist(y, z) != 2 || !m.between(x, z, v) || !m.between(y, z, v)
        {
            continue;
        }
        for xp in 0..n {
            if !(m.edge(x, xp) && m.edge(xp, z)) {
                continue;
            }
            for yp in 0..n {
                if m.edge(y, yp) && m.edge(yp, z) && is_pentagon(m, [x, xp, z, yp, y]) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_triangle(m: &MetricOracle, x: usize, y: usize, z: usize) -> bool {
    m.edge(x, y) && m.edge(y, z) && m.edge(x, z)
}

pub fn is_square(m: &MetricOracle, a: usize, b: usize, c: usize, d: usize) -> bool {
    a != c
        && b != d
        && m.edge(a, b)
        && m.edge(b, c)
        && m.edge(c, d)
        && m.edge(d, a)
        && !m.edge(a, c)
        && !m.edge(b, d)
}

pub fn is_pentagon(m: &MetricOracle, vs: [usize; 5]) -> bool {
    for i in 0..5 {
        for j in i + 1..5 {
            let consecutive = (j - i) == 1 || (i == 0 && j == 4);
            if consecutive {
                if !m.edge(vs[i], vs[j]) {
                    return false;
                }
            } else if vs[i] == vs[j] || m.edge(vs[i], vs[j]) {
                return false;
            }
        }
    }
    true
}

/// Interval neighborhood condition: neighbors of u inside I(u,v) form a
/// clique.
pub fn inc(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let nbrs: Vec<usize> = (0..n)
                .filter(|&x| m.edge(u, x) && m.between(u, x, v))
                .collect();
            for (i, &x) in nbrs.iter().enumerate() {
                for &y in &nbrs[i + 1..] {
                    if !m.edge(x, y) {
                        return Some(vec![u, v, x, y]);
                    }
                }
            }
        }
    }
    None
}

/// Almost quadrangle condition: the QC configuration closes into a square
/// hanging from the edge ux toward v.
pub fn aqc(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for v in 0..n {
        for x in 0..n {
            for y in 0..n {
                if x == y || m.edge(x, y) || m.dist(v, x) != m.dist(v, y) {
                    continue;
                }
                for u in 0..n {
                    if !m.edge(u, x) || !m.edge(u, y) || m.dist(v, u) != m.dist(v, x) + 1 {
                        continue;
                    }
                    let ok = (0..n).any(|z| {
                        m.between(x, z, v)
                            && (0..n).any(|w| is_square(m, u, x, z, w))
                    });
                    if !ok {
                        return Some(vec![v, x, y, u]);
                    }
                }
            }
        }
    }
    None
}

/// The relaxed quadrangle condition: vertices at distance two have a common
/// neighbor whose doubled distance to v is at most the distance sum.
pub fn qc_minus(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for v in 0..n {
        for x in 0..n {
            for y in 0..n {
                if m.dist(x, y) != 2 {
                    continue;
                }
                let ok = (0..n).any(|z| {
                    m.edge(x, z) && m.edge(y, z) && 2 * m.dist(v, z) <= m.dist(v, x) + m.dist(v, y)
                });
                if !ok {
                    return Some(vec![v, x, y]);
                }
            }
        }
    }
    None
}

/// S is convex: it contains the interval between any two of its members.
pub fn is_convex(m: &MetricOracle, s: &[usize]) -> bool {
    let mut inside = vec![false; m.n()];
    for &v in s {
        inside[v] = true;
    }
    for &x in s {
        for &y in s {
            for z in 0..m.n() {
                if !inside[z] && m.between(x, z, y) {
                    return false;
                }
            }
        }
    }
    true
}

/// Convex hull by iterating the interval operator to a fixpoint.
pub fn conv_hull(m: &MetricOracle, s: &[usize]) -> Vec<usize> {
    let n = m.n();
    let mut inside = vec![false; n];
    for &v in s {
        inside[v] = true;
    }
    loop {
        let mut grew = false;
        let members: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
        for &x in &members {
            for &y in &members {
                for z in 0..n {
                    if !inside[z] && m.between(x, z, y) {
                        inside[z] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    (0..n).filter(|&v| inside[v]).collect()
}

/// Every ball is convex.
pub fn convex_balls(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for v in 0..n {
        let ecc = (0..n).map(|x| m.dist(v, x)).max().unwrap_or(0);
        for r in 1..=ecc {
            let ball: Vec<usize> = (0..n).filter(|&x| m.dist(v, x) <= r).collect();
            if !is_convex(m, &ball) {
                return Some(vec![v, r]);
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

    #[test]
    fn tc_on_pentagon_fails_with_least_witness() {
        let m = oracle(families::cycle(5).unwrap());
        assert_eq!(tc(&m), Some(vec![0, 2, 3]));
    }

    #[test]
    fn qc_values_verified_by_enumeration() {
        // C5: no quadruple matches the antecedent, so QC holds vacuously
        assert_eq!(qc(&oracle(families::cycle(5).unwrap())), None);
        // C6: (v,x,y,u) = (0,2,4,3) has no square toward v
        assert_eq!(qc(&oracle(families::cycle(6).unwrap())), Some(vec![0, 2, 4, 3]));
        assert_eq!(qc(&oracle(families::cycle(4).unwrap())), None);
        assert_eq!(qc(&oracle(families::hypercube(3).unwrap())), None);
    }

    #[test]
    fn tpc_holds_on_pentagon() {
        assert_eq!(tpc(&oracle(families::cycle(5).unwrap())), None);
        assert_eq!(tpc(&oracle(families::complete(4).unwrap())), None);
    }

    #[test]
    fn inc_fails_on_cube_with_least_witness() {
        // neighbors 1,2 of 0 inside I(0,3) are non-adjacent
        let m = oracle(families::hypercube(3).unwrap());
        assert_eq!(inc(&m), Some(vec![0, 3, 1, 2]));
        assert_eq!(inc(&oracle(families::cycle(5).unwrap())), None);
    }

    #[test]
    fn meshed_condition_on_small_graphs() {
        assert_eq!(qc_minus(&oracle(families::complete(3).unwrap())), None);
        assert_eq!(qc_minus(&oracle(families::hypercube(3).unwrap())), None);
        // C6 fails the relaxed condition as well
        assert!(qc_minus(&oracle(families::cycle(6).unwrap())).is_some());
    }

    #[test]
    fn hull_is_a_closure_operator() {
        let m = oracle(families::cycle(6).unwrap());
        let h = conv_hull(&m, &[0, 2]);
        assert_eq!(h, vec![0, 1, 2]);
        // extensive + idempotent
        let h2 = conv_hull(&m, &h);
        assert_eq!(h, h2);
        assert!(is_convex(&m, &h));
    }

    #[test]
    fn convex_balls_examples() {
        assert_eq!(convex_balls(&oracle(families::cycle(5).unwrap())), None);
        assert!(convex_balls(&oracle(families::cycle(6).unwrap())).is_some());
        assert_eq!(convex_balls(&oracle(families::complete(4).unwrap())), None);
    }
}
