//! Finite simple connected undirected graphs with stable vertex indexing.

use crate::error::{Error, Result};
use std::fmt::Write as _;

/// A finite simple undirected graph on vertices `0..n`.
///
/// The adjacency relation is kept both as a matrix (O(1) queries) and as
/// sorted neighbor lists (fast iteration). Connectivity is not enforced at
/// construction; metric operations require it and fail otherwise.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("graphs must have at least one vertex".into()));
        }
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if adj[u * n + v] {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        let neighbors = (0..n)
            .map(|u| (0..n).filter(|&v| adj[u * n + v]).collect())
            .collect();
        Ok(Graph { n, adj, neighbors, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Edges as sorted pairs (u < v), in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.unreachable_vertex().is_none()
    }

    /// Some vertex not reachable from vertex 0, if any.
    pub fn unreachable_vertex(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.neighbors[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().position(|s| !s)
    }

    /// A proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.neighbors[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected and acyclic (m = n - 1).
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.m() + 1 == self.n
    }

    /// DFS-based cycle detection, independent of edge counting.
    pub fn has_cycle(&self) -> bool {
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.neighbors[u] {
                    if !seen[v] {
                        seen[v] = true;
                        parent[v] = u;
                        stack.push(v);
                    } else if parent[u] != v {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Biconnected components as vertex sets (blocks of the block-cut tree).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        // iterative Hopcroft-Tarjan over edges
        let n = self.n;
        let mut num = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut blocks = Vec::new();
        let mut counter = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if num[root] != usize::MAX {
                continue;
            }
            // stack entries: (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            num[root] = counter;
            low[root] = counter;
            counter += 1;
            while let Some(&mut (u, p, ref mut idx)) = stack.last_mut() {
                if *idx < self.neighbors[u].len() {
                    let v = self.neighbors[u][*idx];
                    *idx += 1;
                    if v == p {
                        continue;
                    }
                    if num[v] == usize::MAX {
                        edge_stack.push((u, v));
                        num[v] = counter;
                        low[v] = counter;
                        counter += 1;
                        stack.push((v, u, 0));
                    } else if num[v] < num[u] {
                        edge_stack.push((u, v));
                        low[u] = low[u].min(num[v]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (pu, _, _)) = stack.last_mut() {
                        low[pu] = low[pu].min(low[u]);
                        if low[u] >= num[pu] {
                            let mut block = Vec::new();
                            while let Some(&(a, b)) = edge_stack.last() {
                                if num[a] >= num[u] || (a == pu && b == u) {
                                    edge_stack.pop();
                                    block.push(a);
                                    block.push(b);
                                    if a == pu && b == u {
                                        break;
                                    }
                                } else {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            block.dedup();
                            if !block.is_empty() {
                                blocks.push(block);
                            }
                        }
                    }
                }
            }
        }
        if blocks.is_empty() && n == 1 {
            blocks.push(vec![0]);
        }
        blocks
    }

    /// Relabel vertices by a permutation: vertex v becomes perm[v].
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> =
            self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges).expect("permutation preserves validity")
    }

    /// Induced subgraph on `keep` (order of `keep` gives the new indexing).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if i < j && self.adjacent(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(keep.len(), &edges).expect("induced subgraph is valid")
    }

    /// Graph text format: `n m` header, one `u v` line per edge, `#` comments.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(Error::GraphFormat {
            line: 0,
            msg: "empty input".into(),
        })?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(Error::GraphFormat { line, msg: "expected vertex count".into() })?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(Error::GraphFormat { line, msg: "expected edge count".into() })?;
        if it.next().is_some() {
            return Err(Error::GraphFormat { line, msg: "trailing tokens after `n m`".into() });
        }
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, l) = lines.next().ok_or(Error::GraphFormat {
                line: 0,
                msg: format!("expected {m} edge lines"),
            })?;
            let mut it = l.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(Error::GraphFormat { line, msg: "expected edge endpoint".into() })?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(Error::GraphFormat { line, msg: "expected edge endpoint".into() })?;
            if it.next().is_some() {
                return Err(Error::GraphFormat { line, msg: "trailing tokens after edge".into() });
            }
            edges.push((u, v));
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::GraphFormat { line, msg: "unexpected extra line".into() });
        }
        Graph::new(n, &edges).map_err(|e| Error::GraphFormat { line: 0, msg: e.to_string() })
    }

    /// Serialize in the text format (edges sorted, name as a leading comment).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "# {name}");
        }
        let edges = self.edges();
        let _ = writeln!(out, "{} {}", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}", self.n, self.m())?;
        if let Some(name) = &self.name {
            write!(f, ", {name}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_query() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(g.adjacent(0, 1) && g.adjacent(1, 0));
        assert!(!g.adjacent(0, 2));
        assert_eq!(g.m(), 2);
        assert!(g.is_connected());
        assert!(g.is_tree());
        assert!(!g.has_cycle());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(2, &[(0, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 3)]).is_err());
        assert!(Graph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(0, &[]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let text = "# a square\n4 4\n0 1\n1 2\n2 3\n0 3\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        let again = Graph::parse(&g.to_text()).unwrap();
        assert_eq!(g.edges(), again.edges());
    }

    #[test]
    fn parse_errors_carry_lines() {
        match Graph::parse("3 2\n0 1\n") {
            Err(Error::GraphFormat { .. }) => {}
            other => panic!("expected format error, got {other:?}"),
        }
        assert!(Graph::parse("3 1\n0 1\n0 2\n").is_err());
    }

    #[test]
    fn bipartition_and_cycles() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.is_bipartite());
        assert!(c4.has_cycle());
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!c5.is_bipartite());
    }

    #[test]
    fn blocks_of_two_triangles() {
        // two triangles sharing vertex 2
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let mut blocks = g.blocks();
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
    }

    #[test]
    fn blocks_of_path_are_edges() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut blocks = g.blocks();
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }
}
