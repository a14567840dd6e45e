use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected edge between 0-based vertices `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

/// Simple undirected graph with real edge weights: no self-loops and at most
/// one edge per unordered pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedGraph {
    n_vertex: usize,
    edges: Vec<Edge>,
}

impl WeightedGraph {
    /// Builds a graph from 0-based `(a, b, w)` triples in any orientation.
    pub fn new<I>(n_vertex: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (a, b, w) in edges {
            if a >= n_vertex || b >= n_vertex {
                return Err(Error::InvalidInstance(format!("edge ({a}, {b}) out of range for {n_vertex} vertices")));
            }
            if a == b {
                return Err(Error::InvalidInstance(format!("self-loop on vertex {a}")));
            }
            if !w.is_finite() {
                return Err(Error::InvalidInstance(format!("non-finite weight on ({a}, {b})")));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(Error::InvalidInstance(format!("duplicate edge ({u}, {v})")));
            }
            out.push(Edge { u, v, w });
        }
        Ok(Self { n_vertex, edges: out })
    }

    pub fn unweighted<I>(n_vertex: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n_vertex, pairs.into_iter().map(|(a, b)| (a, b, 1.0)))
    }

    pub fn n_vertex(&self) -> usize {
        self.n_vertex
    }

    pub fn n_edge(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.w == 1.0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_vertex];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_vertex];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        adj
    }

    /// Unit-weight complement: an edge for every non-adjacent pair.
    pub fn complement(&self) -> Self {
        let mut adj = self.adjacency();
        for row in &mut adj {
            row.sort_unstable();
        }
        let mut edges = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            let mut it = row.iter().copied().filter(|&v| v > u).peekable();
            for v in (u + 1)..self.n_vertex {
                if it.peek() == Some(&v) {
                    it.next();
                } else {
                    edges.push(Edge { u, v, w: 1.0 });
                }
            }
        }
        Self { n_vertex: self.n_vertex, edges }
    }

    pub(crate) fn require_unweighted(&self, what: &str) -> Result<()> {
        if self.is_unweighted() {
            Ok(())
        } else {
            Err(Error::InvalidInstance(format!("{what} expects an unweighted graph")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edges() {
        assert!(WeightedGraph::unweighted(3, [(0, 0)]).is_err());
        assert!(WeightedGraph::unweighted(3, [(0, 3)]).is_err());
        assert!(WeightedGraph::unweighted(3, [(0, 1), (1, 0)]).is_err());
        assert!(WeightedGraph::new(2, [(0, 1, f64::INFINITY)]).is_err());
    }

    #[test]
    fn edges_are_oriented() {
        let g = WeightedGraph::new(3, [(2, 0, -1.0)]).unwrap();
        assert_eq!(g.edges(), &[Edge { u: 0, v: 2, w: -1.0 }]);
        assert!(!g.is_unweighted());
    }

    #[test]
    fn complement_of_path() {
        let path = WeightedGraph::unweighted(3, [(0, 1), (1, 2)]).unwrap();
        let c = path.complement();
        assert_eq!(c.edges(), &[Edge { u: 0, v: 2, w: 1.0 }]);
        assert_eq!(c.complement(), path);
    }

    #[test]
    fn degrees() {
        let star = WeightedGraph::unweighted(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degrees(), vec![3, 1, 1, 1]);
        assert_eq!(star.max_degree(), 3);
        assert_eq!(WeightedGraph::unweighted(2, []).unwrap().max_degree(), 0);
    }
}
