//! Induced and isometric subgraph search by backtracking.
//!
//! Both searches are deterministic: pattern vertices are mapped in index
//! order and candidate images tried ascending, so the first embedding found
//! is the lexicographically least in image order.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::MetricOracle;

/// Least embedding of `h` into `g` preserving edges and non-edges, if any.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    let mut mapping = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    if induced_rec(g, h, 0, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}

fn induced_rec(g: &Graph, h: &Graph, i: usize, mapping: &mut [usize], used: &mut [bool]) -> bool {
    if i == h.n() {
        return true;
    }
    'cand: for c in 0..g.n() {
        if used[c] || g.degree(c) < h.degree(i) {
            continue;
        }
        for j in 0..i {
            if h.adjacent(i, j) != g.adjacent(c, mapping[j]) {
                continue 'cand;
            }
        }
        mapping[i] = c;
        used[c] = true;
        if induced_rec(g, h, i + 1, mapping, used) {
            return true;
        }
        used[c] = false;
    }
    false
}

/// Least embedding of connected `h` into `g` preserving all pairwise
/// distances, if any.
pub fn find_isometric(g: &MetricOracle, h: &MetricOracle) -> Result<Option<Vec<usize>>> {
    if !h.graph().is_connected() {
        return Err(Error::DisconnectedPattern);
    }
    if h.n() > g.n() {
        return Ok(None);
    }
    let mut mapping = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    Ok(if isometric_rec(g, h, 0, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    })
}

fn isometric_rec(
    g: &MetricOracle,
    h: &MetricOracle,
    i: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == h.n() {
        return true;
    }
    'cand: for c in 0..g.n() {
        if used[c] {
            continue;
        }
        for j in 0..i {
            if g.dist(mapping[j], c) != h.dist(j, i) {
                continue 'cand;
            }
        }
        mapping[i] = c;
        used[c] = true;
        if isometric_rec(g, h, i + 1, mapping, used) {
            return true;
        }
        used[c] = false;
    }
    false
}

/// Convenience wrapper building the pattern metric.
pub fn contains_isometric(g: &MetricOracle, h: &Graph) -> Result<Option<Vec<usize>>> {
    let hm = MetricOracle::new(h.clone())?;
    find_isometric(g, &hm)
}
