//! Positioning and 2-interval conditions used by the basis-graph classes.

use super::conditions::is_square;
use crate::data::ForbiddenLists;
use crate::error::Result;
use crate::graph::Graph;
use crate::metric::MetricOracle;
use crate::subgraph::find_induced;

/// For any square wxyz and vertex v the two diagonal distance sums agree.
pub fn positioning_condition(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for v in 0..n {
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !is_square(m, w, x, y, z) {
                            continue;
                        }
                        if m.dist(v, w) + m.dist(v, y) != m.dist(v, x) + m.dist(v, z) {
                            return Some(vec![v, w, x, y, z]);
                        }
                    }
                }
            }
        }
    }
    None
}

fn two_interval(m: &MetricOracle, u: usize, v: usize) -> Vec<usize> {
    (0..m.n()).filter(|&x| m.between(u, x, v)).collect()
}

fn interval_shape_is(m: &MetricOracle, members: &[usize], target: &Graph) -> bool {
    if members.len() != target.n() {
        return false;
    }
    let sub = m.graph().induced(members);
    // equal orders: an induced embedding is an isomorphism
    sub.m() == target.m() && find_induced(&sub, target).is_some()
}

/// The 2-interval I(u,v) induces a square, a pyramid, or a 3-octahedron.
pub fn two_interval_shape_ok_3(m: &MetricOracle, u: usize, v: usize) -> bool {
    let square = crate::families::cycle(4).unwrap();
    let pyramid = crate::families::wheel(4).unwrap();
    let oct3 = crate::families::octahedron(3).unwrap();
    let members = two_interval(m, u, v);
    interval_shape_is(m, &members, &square)
        || interval_shape_is(m, &members, &pyramid)
        || interval_shape_is(m, &members, &oct3)
}

/// Every 2-interval induces a square, a pyramid, or a 3-octahedron.
pub fn two_interval_condition_3(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            if m.dist(u, v) == 2 && !two_interval_shape_ok_3(m, u, v) {
                return Some(vec![u, v]);
            }
        }
    }
    None
}

/// Partition `sub`'s vertices into at most 4 non-adjacent classes of size
/// at most 2 (i.e. the graph is a subgraph of a 4-octahedron).
fn fits_in_4_octahedron(sub: &Graph) -> bool {
    if sub.n() > 8 {
        return false;
    }
    fn rec(sub: &Graph, classes: &mut Vec<Vec<usize>>, v: usize) -> bool {
        if v == sub.n() {
            return true;
        }
        for i in 0..classes.len() {
            if classes[i].len() < 2 && classes[i].iter().all(|&w| !sub.adjacent(v, w)) {
                classes[i].push(v);
                if rec(sub, classes, v + 1) {
                    return true;
                }
                classes[i].pop();
            }
        }
        if classes.len() < 4 {
            classes.push(vec![v]);
            if rec(sub, classes, v + 1) {
                return true;
            }
            classes.pop();
        }
        false
    }
    rec(sub, &mut Vec::new(), 0)
}

/// The 2-interval I(u,v) contains a square and fits in a 4-octahedron.
pub fn two_interval_shape_ok_4(m: &MetricOracle, u: usize, v: usize) -> bool {
    let members = two_interval(m, u, v);
    let has_square = members.iter().any(|&a| {
        members.iter().any(|&b| {
            members.iter().any(|&c| {
                members
                    .iter()
                    .any(|&d| a < c && b < d && a < b && is_square(m, a, b, c, d))
            })
        })
    });
    has_square && fits_in_4_octahedron(&m.graph().induced(&members))
}

/// Every 2-interval contains a square and is a subgraph of a 4-octahedron.
pub fn two_interval_condition_4(m: &MetricOracle) -> Option<Vec<usize>> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            if m.dist(u, v) == 2 && !two_interval_shape_ok_4(m, u, v) {
                return Some(vec![u, v]);
            }
        }
    }
    None
}

/// The neighborhood of every vertex induces a line graph, via the forbidden
/// list with a universal vertex added. Returns (vertex-set embedding) of the
/// first violation.
pub fn link_condition(
    m: &MetricOracle,
    lists: &ForbiddenLists,
) -> Result<Option<Vec<usize>>> {
    let primed = lists.get("beineke_f_primed")?;
    for f in primed {
        if let Some(embedding) = find_induced(m.graph(), f) {
            return Ok(Some(embedding));
        }
    }
    Ok(None)
}
