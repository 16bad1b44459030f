//! Halfspaces of an edge, the edge parallelism relation, and boundary
//! predicates of partial cubes.

use super::conditions::is_convex;
use crate::error::{Error, Result};
use crate::metric::MetricOracle;

/// The vertex partition induced by an edge uv, with boundaries.
#[derive(Clone, Debug)]
pub struct HalfspaceDecomposition {
    pub w_uv: Vec<usize>,
    pub w_vu: Vec<usize>,
    pub w_eq: Vec<usize>,
    pub u_uv: Vec<usize>,
    pub u_vu: Vec<usize>,
    /// Edges parallel to uv (including uv itself).
    pub theta_class: Vec<(usize, usize)>,
}

pub fn halfspaces(m: &MetricOracle, u: usize, v: usize) -> Result<HalfspaceDecomposition> {
    if !m.edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let n = m.n();
    let w_uv: Vec<usize> = (0..n).filter(|&x| m.dist(x, u) < m.dist(x, v)).collect();
    let w_vu: Vec<usize> = (0..n).filter(|&x| m.dist(x, v) < m.dist(x, u)).collect();
    let w_eq: Vec<usize> = (0..n).filter(|&x| m.dist(x, v) == m.dist(x, u)).collect();
    let in_vu = |x: usize| m.dist(x, v) < m.dist(x, u);
    let u_uv: Vec<usize> = w_uv
        .iter()
        .copied()
        .filter(|&x| m.graph().neighbors(x).iter().any(|&y| in_vu(y)))
        .collect();
    let in_uv = |x: usize| m.dist(x, u) < m.dist(x, v);
    let u_vu: Vec<usize> = w_vu
        .iter()
        .copied()
        .filter(|&x| m.graph().neighbors(x).iter().any(|&y| in_uv(y)))
        .collect();
    let theta_class = m
        .graph()
        .edges()
        .into_iter()
        .filter(|&(a, b)| theta_related(m, (u, v), (a, b)))
        .collect();
    Ok(HalfspaceDecomposition { w_uv, w_vu, w_eq, u_uv, u_vu, theta_class })
}

/// Edge parallelism: the distance sums across the two edges differ.
pub fn theta_related(m: &MetricOracle, e1: (usize, usize), e2: (usize, usize)) -> bool {
    let (u, v) = e1;
    let (a, b) = e2;
    m.dist(u, a) + m.dist(v, b) != m.dist(u, b) + m.dist(v, a)
}

/// Partition the edges into parallelism classes; fails when the relation is
/// not transitive (it is an equivalence exactly on partial cubes).
pub fn theta_classes(m: &MetricOracle) -> Result<Vec<Vec<(usize, usize)>>> {
    let edges = m.graph().edges();
    let k = edges.len();
    let rel: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..k).map(|j| i == j || theta_related(m, edges[i], edges[j])).collect())
        .collect();
    // transitivity check with a witness
    for i in 0..k {
        for j in 0..k {
            if !rel[i][j] {
                continue;
            }
            for l in 0..k {
                if rel[j][l] && !rel[i][l] {
                    return Err(Error::ThetaNotTransitive(edges[i], edges[l], edges[j]));
                }
            }
        }
    }
    let mut seen = vec![false; k];
    let mut classes = Vec::new();
    for i in 0..k {
        if seen[i] {
            continue;
        }
        let class: Vec<(usize, usize)> =
            (0..k).filter(|&j| rel[i][j]).map(|j| edges[j]).collect();
        for &(a, b) in &class {
            let idx = edges.iter().position(|&e| e == (a, b)).unwrap();
            seen[idx] = true;
        }
        classes.push(class);
    }
    Ok(classes)
}

/// Djokovic's criterion: bipartite with every halfspace convex.
pub fn is_partial_cube(m: &MetricOracle) -> bool {
    if !m.graph().is_bipartite() {
        return false;
    }
    for (u, v) in m.graph().edges() {
        let h = halfspaces(m, u, v).expect("edges are edges");
        if !is_convex(m, &h.w_uv) || !is_convex(m, &h.w_vu) {
            return false;
        }
    }
    true
}

/// First edge whose halfspaces fail convexity, with which side failed.
pub fn partial_cube_witness(m: &MetricOracle) -> Option<Vec<usize>> {
    for (u, v) in m.graph().edges() {
        let h = halfspaces(m, u, v).expect("edges are edges");
        if !is_convex(m, &h.w_uv) {
            return Some(vec![u, v]);
        }
        if !is_convex(m, &h.w_vu) {
            return Some(vec![v, u]);
        }
    }
    None
}

/// I(A): union of the pairwise intervals of A.
pub fn interval_union(m: &MetricOracle, a: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; m.n()];
    for &x in a {
        for &y in a {
            for z in 0..m.n() {
                if m.between(x, z, y) {
                    inside[z] = true;
                }
            }
        }
    }
    (0..m.n()).filter(|&v| inside[v]).collect()
}

fn require_partial_cube(m: &MetricOracle) -> Result<()> {
    if is_partial_cube(m) {
        Ok(())
    } else {
        Err(Error::NotPartialCube)
    }
}

/// The boundary U(u,v) is ph-stable: for x,y in I(U(u,v)) there is w in
/// U(u,v) with y between x and w.
pub fn ph_stable(m: &MetricOracle, u: usize, v: usize) -> Result<bool> {
    require_partial_cube(m)?;
    let h = halfspaces(m, u, v)?;
    let iu = interval_union(m, &h.u_uv);
    Ok(iu.iter().all(|&x| {
        iu.iter().all(|&y| h.u_uv.iter().any(|&w| m.between(x, y, w)))
    }))
}

/// Vertices of degree >= 3 in the subgraph induced by I(U(u,v)) lie in
/// U(u,v).
pub fn degree3_convex(m: &MetricOracle, u: usize, v: usize) -> Result<bool> {
    require_partial_cube(m)?;
    let h = halfspaces(m, u, v)?;
    let iu = interval_union(m, &h.u_uv);
    Ok(iu.iter().all(|&z| {
        let deg = iu.iter().filter(|&&y| m.edge(z, y)).count();
        deg < 3 || h.u_uv.contains(&z)
    }))
}

/// Boundary is a connected subgraph.
pub fn boundary_connected(m: &MetricOracle, u: usize, v: usize) -> Result<bool> {
    require_partial_cube(m)?;
    let h = halfspaces(m, u, v)?;
    let sub = m.graph().induced(&h.u_uv);
    Ok(sub.is_connected())
}

/// Boundary induces an isometric subgraph.
pub fn boundary_isometric(m: &MetricOracle, u: usize, v: usize) -> Result<bool> {
    require_partial_cube(m)?;
    let h = halfspaces(m, u, v)?;
    let sub = m.graph().induced(&h.u_uv);
    if !sub.is_connected() {
        return Ok(false);
    }
    let sm = MetricOracle::new(sub)?;
    for (i, &x) in h.u_uv.iter().enumerate() {
        for (j, &y) in h.u_uv.iter().enumerate() {
            if sm.dist(i, j) != m.dist(x, y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
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
    fn halfspaces_partition_the_vertices() {
        let m = oracle(families::cycle(5).unwrap());
        let h = halfspaces(&m, 0, 1).unwrap();
        assert_eq!(h.w_uv, vec![0, 4]);
        assert_eq!(h.w_vu, vec![1, 2]);
        assert_eq!(h.w_eq, vec![3]);
        let total = h.w_uv.len() + h.w_vu.len() + h.w_eq.len();
        assert_eq!(total, 5);
    }

    #[test]
    fn bipartite_has_empty_equal_side() {
        let m = oracle(families::hypercube(3).unwrap());
        for (u, v) in m.graph().edges() {
            assert!(halfspaces(&m, u, v).unwrap().w_eq.is_empty());
        }
    }

    #[test]
    fn theta_classes_of_cube_and_hexagon() {
        let q3 = oracle(families::hypercube(3).unwrap());
        let classes = theta_classes(&q3).unwrap();
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|c| c.len() == 4));

        let c6 = oracle(families::cycle(6).unwrap());
        let classes = theta_classes(&c6).unwrap();
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn theta_on_pentagon_is_not_transitive() {
        let c5 = oracle(families::cycle(5).unwrap());
        assert!(matches!(theta_classes(&c5), Err(Error::ThetaNotTransitive(_, _, _))));
    }

    #[test]
    fn partial_cube_examples() {
        assert!(is_partial_cube(&oracle(families::cycle(6).unwrap())));
        assert!(is_partial_cube(&oracle(families::hypercube(4).unwrap())));
        assert!(!is_partial_cube(&oracle(families::complete_bipartite(2, 3).unwrap())));
        assert!(!is_partial_cube(&oracle(families::cycle(5).unwrap())));
    }

    #[test]
    fn tree_boundaries_are_single_vertices() {
        let m = oracle(families::path(4).unwrap());
        let h = halfspaces(&m, 1, 2).unwrap();
        assert_eq!(h.u_uv, vec![1]);
        assert_eq!(h.u_vu, vec![2]);
        assert!(ph_stable(&m, 1, 2).unwrap());
        assert!(degree3_convex(&m, 1, 2).unwrap());
        assert!(boundary_connected(&m, 1, 2).unwrap());
        assert!(boundary_isometric(&m, 1, 2).unwrap());
    }

    #[test]
    fn cube_boundary_is_a_face() {
        let m = oracle(families::hypercube(3).unwrap());
        let h = halfspaces(&m, 0, 1).unwrap();
        assert_eq!(h.u_uv.len(), 4);
        assert!(boundary_isometric(&m, 0, 1).unwrap());
        assert!(ph_stable(&m, 0, 1).unwrap());
    }

    #[test]
    fn hexagon_boundary_is_disconnected() {
        let m = oracle(families::cycle(6).unwrap());
        assert!(!boundary_connected(&m, 0, 1).unwrap());
        assert!(!boundary_isometric(&m, 0, 1).unwrap());
        // but still ph-stable and degree-3-convex (netlike)
        assert!(ph_stable(&m, 0, 1).unwrap());
        assert!(degree3_convex(&m, 0, 1).unwrap());
    }

    #[test]
    fn boundary_predicates_reject_non_partial_cubes() {
        let m = oracle(families::cycle(5).unwrap());
        assert!(matches!(ph_stable(&m, 0, 1), Err(Error::NotPartialCube)));
    }
}
