//! Immutable simple undirected graphs on labeled vertices `0..n`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest supported order. Adjacency rows are single machine words and the
/// graph6 codec uses the one-byte header, both of which top out at 62.
pub const MAX_VERTICES: usize = 62;

/// A simple undirected graph: a vertex count and a set of unordered pairs.
///
/// Vertex labels are preserved as given; the value is immutable after
/// construction, so sharing across threads for concurrent reads is safe.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list, normalizing and deduplicating pairs.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        if n < 1 || n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        let mut adj = alloc::vec![0u64; n];
        for &(u, v) in edge_list {
            if u == v {
                return Err(Error::SelfLoop { u });
            }
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_adj(n, adj))
    }

    fn from_adj(n: usize, adj: Vec<u64>) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            let mut row = adj[u] & !((1u64 << (u + 1)) - 1);
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                edges.push((u, v));
                row &= row - 1;
            }
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees indexed by vertex label.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// First Zagreb index as an integer: sum of squared degrees.
    pub fn first_zagreb(&self) -> usize {
        (0..self.n).map(|v| self.degree(v) * self.degree(v)).sum()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= self.adj[v];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Returns a copy with the edge `{u, v}` added (idempotent).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u == v {
            return Err(Error::SelfLoop { u });
        }
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { u, v, n: self.n });
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Self::from_adj(self.n, adj))
    }

    /// Returns a copy with one extra vertex attached to `v` by a single edge.
    pub fn with_leaf(&self, v: usize) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        let mut adj = self.adj.clone();
        adj.push(1 << v);
        adj[v] |= 1 << (n - 1);
        Ok(Self::from_adj(n, adj))
    }

    /// Relabels vertices: new label `i` is the old vertex `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut inv = alloc::vec![0usize; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut adj = alloc::vec![0u64; self.n];
        for &(u, v) in &self.edges {
            let (u, v) = (inv[u], inv[v]);
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Self::from_adj(self.n, adj)
    }

    /// The line graph: one vertex per edge, adjacency is sharing an endpoint.
    ///
    /// Vertex `i` of the result corresponds to `self.edges()[i]`.
    pub fn line_graph(&self) -> Result<Graph> {
        let m = self.m();
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: m });
        }
        if m == 0 {
            // L(G) of an edgeless graph is empty; represent K1-free case as
            // the minimal graph only when an edge exists.
            return Graph::new(1.max(m), &[]);
        }
        let mut adj = alloc::vec![0u64; m];
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = self.edges[i];
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Ok(Self::from_adj(m, adj))
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_k2() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.degree_sequence(), [1, 1]);
    }

    #[test]
    fn builds_star_s4() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(g.degree_sequence(), [3, 1, 1, 1]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(Error::SelfLoop { u: 0 }));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { u: 0, v: 3, n: 3 })
        );
    }

    #[test]
    fn degree_sequences() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.degree_sequence(), [2, 2, 1, 1]);
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(c5.degree_sequence(), [2; 5]);
        assert_eq!(
            c5.degrees().iter().sum::<usize>(),
            2 * c5.m(),
            "handshake"
        );
    }

    #[test]
    fn line_graphs() {
        let s4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let l = s4.line_graph().unwrap();
        assert_eq!(l.n(), 3);
        assert_eq!(l.m(), 3); // K3

        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let l = p4.line_graph().unwrap();
        assert_eq!((l.n(), l.m()), (3, 2)); // P3

        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let l = c5.line_graph().unwrap();
        assert_eq!((l.n(), l.m()), (5, 5));
        assert!(l.is_connected());
        assert_eq!(l.degree_sequence(), [2; 5]); // C5 again
    }

    #[test]
    fn connectivity() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(g.is_connected());
    }
}
