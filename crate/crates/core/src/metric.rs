//! All-pairs distances and the derived betweenness predicate of a graph.

use crate::error::{Error, Result};
use crate::graph::Graph;

const DENSE_CACHE_LIMIT: usize = 256;

/// Distance matrix of a connected graph plus the derived ternary
/// betweenness `B(u,x,v) <=> d(u,x) + d(x,v) = d(u,v)` and the edge
/// predicate recovered from it.
#[derive(Clone)]
pub struct MetricOracle {
    graph: Graph,
    dist: Vec<u16>,
    dense_b: Option<Vec<u64>>,
}

impl MetricOracle {
    /// Compute the graph metric by breadth-first traversal from every vertex.
    pub fn new(graph: Graph) -> Result<MetricOracle> {
        if let Some(v) = graph.unreachable_vertex() {
            return Err(Error::DisconnectedGraph(v));
        }
        let n = graph.n();
        let mut dist = vec![u16::MAX; n * n];
        let mut queue = Vec::with_capacity(n);
        for s in 0..n {
            dist[s * n + s] = 0;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let du = dist[s * n + u];
                for &v in graph.neighbors(u) {
                    if dist[s * n + v] == u16::MAX {
                        dist[s * n + v] = du + 1;
                        queue.push(v);
                    }
                }
            }
        }
        Ok(MetricOracle { graph, dist, dense_b: None })
    }

    /// Materialize B as a bit table. Only worthwhile for repeated heavy
    /// evaluation; refused above 256 vertices.
    pub fn with_dense_cache(mut self) -> MetricOracle {
        let n = self.graph.n();
        if n > DENSE_CACHE_LIMIT {
            return self;
        }
        let bits = n * n * n;
        let mut table = vec![0u64; bits.div_ceil(64)];
        for u in 0..n {
            for x in 0..n {
                for v in 0..n {
                    if self.between_raw(u, x, v) {
                        let i = (u * n + x) * n + v;
                        table[i / 64] |= 1 << (i % 64);
                    }
                }
            }
        }
        self.dense_b = Some(table);
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.graph.n() + v] as usize
    }

    fn between_raw(&self, u: usize, x: usize, v: usize) -> bool {
        self.dist(u, x) + self.dist(x, v) == self.dist(u, v)
    }

    /// `x` lies on some shortest path from `u` to `v`.
    pub fn between(&self, u: usize, x: usize, v: usize) -> bool {
        match &self.dense_b {
            Some(table) => {
                let n = self.graph.n();
                let i = (u * n + x) * n + v;
                table[i / 64] >> (i % 64) & 1 == 1
            }
            None => self.between_raw(u, x, v),
        }
    }

    /// Edge predicate derived from betweenness: distinct endpoints whose
    /// interval contains nothing else. Coincides with adjacency.
    pub fn edge(&self, u: usize, v: usize) -> bool {
        self.dist(u, v) == 1
    }

    /// The interval I(u,v), sorted ascending. Always contains u and v.
    pub fn interval(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.graph.n()).filter(|&x| self.between(u, x, v)).collect()
    }
}

impl std::fmt::Debug for MetricOracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MetricOracle({:?})", self.graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn path_distances() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let m = MetricOracle::new(g).unwrap();
        assert_eq!(m.dist(0, 2), 2);
        assert!(m.between(0, 1, 2));
        assert_eq!(m.interval(0, 2), vec![0, 1, 2]);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        match MetricOracle::new(g) {
            Err(Error::DisconnectedGraph(2)) => {}
            other => panic!("expected disconnected error, got {other:?}"),
        }
    }

    #[test]
    fn cycle_six_opposite_vertices() {
        let m = MetricOracle::new(families::cycle(6).unwrap()).unwrap();
        assert_eq!(m.dist(0, 3), 3);
        assert_eq!(m.dist(1, 4), 3);
    }

    #[test]
    fn square_interval_is_whole_cycle() {
        let m = MetricOracle::new(families::cycle(4).unwrap()).unwrap();
        assert_eq!(m.interval(0, 2), vec![0, 1, 2, 3]);
    }

    #[test]
    fn c5_interval() {
        let m = MetricOracle::new(families::cycle(5).unwrap()).unwrap();
        assert_eq!(m.interval(0, 2), vec![0, 1, 2]);
    }

    #[test]
    fn hypercube_distances_are_hamming() {
        let m = MetricOracle::new(families::hypercube(3).unwrap()).unwrap();
        for u in 0..8usize {
            for v in 0..8usize {
                assert_eq!(m.dist(u, v), (u ^ v).count_ones() as usize);
            }
        }
    }

    #[test]
    fn dense_cache_agrees() {
        let plain = MetricOracle::new(families::cycle(5).unwrap()).unwrap();
        let cached = MetricOracle::new(families::cycle(5).unwrap()).unwrap().with_dense_cache();
        for u in 0..5 {
            for x in 0..5 {
                for v in 0..5 {
                    assert_eq!(plain.between(u, x, v), cached.between(u, x, v));
                }
            }
        }
    }

    #[test]
    fn derived_edge_predicate_is_adjacency() {
        let g = families::complete_bipartite(2, 3).unwrap();
        let m = MetricOracle::new(g.clone()).unwrap();
        for u in 0..g.n() {
            for v in 0..g.n() {
                assert_eq!(m.edge(u, v), g.adjacent(u, v));
            }
        }
    }
}
