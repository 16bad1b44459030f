//! Clique-Helly test and the square-in-wheel condition.

use super::conditions::{is_square, is_triangle};
use crate::metric::MetricOracle;

/// For each triangle T, the set T* of vertices adjacent to at least two of
/// T must contain a vertex adjacent to all the rest of T*.
pub fn clique_helly(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if clique_helly_fails_at(m, x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

/// The triangle xyz has no dominating vertex for its extended set T*.
pub fn clique_helly_fails_at(m: &MetricOracle, x: usize, y: usize, z: usize) -> bool {
    if !is_triangle(m, x, y, z) {
        return false;
    }
    let n = m.n();
    let star: Vec<usize> = (0..n)
        .filter(|&v| (m.edge(v, x) as u8) + (m.edge(v, y) as u8) + (m.edge(v, z) as u8) >= 2)
        .collect();
    !star.iter().any(|&u| star.iter().all(|&v| v == u || m.edge(u, v)))
}

/// Every induced square has a vertex adjacent to all four corners.
pub fn c4w4(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !is_square(m, w, x, y, z) {
                        continue;
                    }
                    let ok = (0..n).any(|u| {
                        m.edge(u, w) && m.edge(u, x) && m.edge(u, y) && m.edge(u, z)
                    });
                    if !ok {
                        return Some(vec![w, x, y, z]);
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
    use crate::metric::MetricOracle;

    fn oracle(g: crate::graph::Graph) -> MetricOracle {
        MetricOracle::new(g).unwrap()
    }

    #[test]
    fn complete_graphs_are_clique_helly() {
        assert_eq!(clique_helly(&oracle(families::complete(5).unwrap())), None);
    }

    #[test]
    fn triangle_free_is_vacuously_clique_helly() {
        assert_eq!(clique_helly(&oracle(families::cycle(6).unwrap())), None);
    }

    #[test]
    fn hajos_like_failure() {
        // triangles glued in a ring around an empty center: take the 3-sun
        // (triangle 0,1,2 with pendant triangles via 3,4,5)
        let g = crate::graph::Graph::new(
            6,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)],
        )
        .unwrap();
        assert!(clique_helly(&oracle(g)).is_some());
    }

    #[test]
    fn cube_faces_have_no_wheel_center() {
        let q3 = oracle(families::hypercube(3).unwrap());
        assert_eq!(c4w4(&q3), Some(vec![0, 1, 3, 2]));
        assert_eq!(c4w4(&oracle(families::wheel(4).unwrap())), None);
        assert_eq!(c4w4(&oracle(families::complete(4).unwrap())), None);
    }
}
