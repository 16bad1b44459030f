//! Metric triangles, quasi-medians, and medians.

use crate::metric::MetricOracle;

/// I(a,v) and I(b,v) meet only in v.
pub fn intervals_meet_only_at(m: &MetricOracle, v: usize, a: usize, b: usize) -> bool {
    (0..m.n()).all(|w| w == v || !(m.between(a, w, v) && m.between(b, w, v)))
}

/// The three pairwise intervals meet only at the corners.
pub fn is_metric_triangle(m: &MetricOracle, x: usize, y: usize, z: usize) -> bool {
    intervals_meet_only_at(m, x, y, z)
        && intervals_meet_only_at(m, y, x, z)
        && intervals_meet_only_at(m, z, x, y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricTriangleReport {
    pub triple: (usize, usize, usize),
    pub d_xy: usize,
    pub d_xz: usize,
    pub d_yz: usize,
    pub is_metric: bool,
    pub is_equilateral: bool,
    pub is_strongly_equilateral: bool,
}

pub fn metric_triangle_report(
    m: &MetricOracle,
    x: usize,
    y: usize,
    z: usize,
) -> MetricTriangleReport {
    let is_metric = is_metric_triangle(m, x, y, z);
    MetricTriangleReport {
        triple: (x, y, z),
        d_xy: m.dist(x, y),
        d_xz: m.dist(x, z),
        d_yz: m.dist(y, z),
        is_metric,
        is_equilateral: m.dist(x, y) == m.dist(x, z) && m.dist(x, z) == m.dist(y, z),
        is_strongly_equilateral: is_strongly_equilateral(m, x, y, z),
    }
}

/// Every vertex of I(y,z) is at distance d(x,y) = d(x,z) from x (and
/// symmetrically for the other two sides).
pub fn is_strongly_equilateral(m: &MetricOracle, x: usize, y: usize, z: usize) -> bool {
    let side = |a: usize, b: usize, c: usize| {
        m.dist(a, b) == m.dist(a, c)
            && (0..m.n())
                .filter(|&u| m.between(b, u, c))
                .all(|u| m.dist(a, u) == m.dist(a, b))
    };
    side(x, y, z) && side(y, x, z) && side(z, x, y)
}

/// Quasi-median by the furthest-point construction, ties broken toward the
/// least vertex index.
pub fn quasi_median(m: &MetricOracle, x: usize, y: usize, z: usize) -> (usize, usize, usize) {
    let furthest = |from: usize, candidates: &[usize]| -> usize {
        let mut best = candidates[0];
        for &c in candidates {
            if m.dist(from, c) > m.dist(from, best) {
                best = c;
            }
        }
        best
    };
    let cand_x: Vec<usize> = (0..m.n())
        .filter(|&w| m.between(x, w, y) && m.between(x, w, z))
        .collect();
    let xp = furthest(x, &cand_x);
    let cand_y: Vec<usize> = (0..m.n())
        .filter(|&w| m.between(xp, w, y) && m.between(y, w, z))
        .collect();
    let yp = furthest(y, &cand_y);
    let cand_z: Vec<usize> = (0..m.n())
        .filter(|&w| m.between(xp, w, z) && m.between(yp, w, z))
        .collect();
    let zp = furthest(z, &cand_z);
    (xp, yp, zp)
}

/// All medians of a triple: vertices lying in all three pairwise intervals.
pub fn medians(m: &MetricOracle, x: usize, y: usize, z: usize) -> Vec<usize> {
    (0..m.n())
        .filter(|&w| m.between(x, w, y) && m.between(x, w, z) && m.between(y, w, z))
        .collect()
}

/// Number of ordered triples (x',y',z') forming a quasi-median of (x,y,z).
pub fn count_quasi_medians(m: &MetricOracle, x: usize, y: usize, z: usize) -> usize {
    let n = m.n();
    let d = |a: usize, b: usize| m.dist(a, b);
    let mut count = 0;
    for xp in 0..n {
        if d(x, xp) + d(xp, y) > d(x, y) || d(x, xp) + d(xp, z) > d(x, z) {
            continue;
        }
        for yp in 0..n {
            if d(x, xp) + d(xp, yp) + d(yp, y) != d(x, y) {
                continue;
            }
            for zp in 0..n {
                if d(x, xp) + d(xp, zp) + d(zp, z) != d(x, z) {
                    continue;
                }
                if d(y, yp) + d(yp, zp) + d(zp, z) != d(y, z) {
                    continue;
                }
                if is_metric_triangle(m, xp, yp, zp) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Largest metric triangle size, 0 when all are degenerate.
pub fn max_metric_triangle_size(m: &MetricOracle) -> usize {
    let n = m.n();
    let mut best = 0;
    for x in 0..n {
        for y in x..n {
            for z in y..n {
                if is_metric_triangle(m, x, y, z) {
                    best = best
                        .max(m.dist(x, y))
                        .max(m.dist(x, z))
                        .max(m.dist(y, z));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::metric::MetricOracle;

    fn oracle(g: crate::graph::Graph) -> MetricOracle {
        MetricOracle::new(g).unwrap()
    }

    #[test]
    fn tree_triples_have_unique_medians() {
        let m = oracle(families::random_tree(8, 3).unwrap());
        for x in 0..8 {
            for y in 0..8 {
                for z in 0..8 {
                    assert_eq!(medians(&m, x, y, z).len(), 1);
                }
            }
        }
    }

    #[test]
    fn k23_has_a_double_median() {
        // parts {0,1} and {2,3,4}: the triple of degree-2 vertices has two medians
        let m = oracle(families::complete_bipartite(2, 3).unwrap());
        assert_eq!(medians(&m, 2, 3, 4), vec![0, 1]);
        assert_eq!(count_quasi_medians(&m, 2, 3, 4), 2);
    }

    #[test]
    fn quasi_median_of_triangle_is_itself() {
        let m = oracle(families::complete(4).unwrap());
        assert_eq!(quasi_median(&m, 0, 1, 2), (0, 1, 2));
    }

    #[test]
    fn metric_triangle_size_in_pentagon() {
        let m = oracle(families::cycle(5).unwrap());
        // (0,2,3) is a metric triangle of size 2
        assert!(is_metric_triangle(&m, 0, 2, 3));
        assert_eq!(max_metric_triangle_size(&m), 2);
    }

    #[test]
    fn strongly_equilateral_examples() {
        let k4 = oracle(families::complete(4).unwrap());
        assert!(is_metric_triangle(&k4, 0, 1, 2));
        assert!(is_strongly_equilateral(&k4, 0, 1, 2));
        // C5's size-2 metric triangle is not even equilateral
        let c5 = oracle(families::cycle(5).unwrap());
        assert!(!is_strongly_equilateral(&c5, 0, 2, 3));
        assert!(!metric_triangle_report(&c5, 0, 2, 3).is_equilateral);
    }
}
