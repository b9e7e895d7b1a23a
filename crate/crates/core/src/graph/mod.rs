//! Simple undirected graphs on dense vertex ids `0..n`.

mod blocks;
mod construct;

pub use blocks::{
    block_graph_decomposition, classify, decompose, is_block_graph, BlockCutDecomposition,
    Classification,
};
pub use construct::{
    caterpillar, complete, greedy_tree, line_graph, path, path_like, random_block_graph, star,
    star_like, windmill, DegreeSequence, GreedyTree,
};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Immutable simple graph. Neighbor lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Breadth-first distances from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// Number of edges on a shortest `u`-`v` path.
    pub fn geodesic_distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.distances_from(u)[v].ok_or(Error::Disconnected)
    }

    /// All-pairs distance matrix of a connected graph.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.order())
            .map(|s| {
                self.distances_from(s)
                    .into_iter()
                    .map(|d| d.ok_or(Error::Disconnected))
                    .collect()
            })
            .collect()
    }

    /// Sizes of the connected components, in order of their smallest vertex.
    pub fn component_sizes(&self) -> Vec<usize> {
        self.component_sizes_filtered(|_| true, |_, _| true)
    }

    /// Component sizes after deleting vertex `v` (and its edges).
    pub fn component_sizes_without_vertex(&self, v: usize) -> Vec<usize> {
        self.component_sizes_filtered(|w| w != v, |_, _| true)
    }

    /// Component sizes after deleting the edges with both ends in `clique`.
    /// No vertex is removed.
    pub fn component_sizes_without_clique_edges(&self, clique: &[usize]) -> Vec<usize> {
        let inside = |x: usize| clique.binary_search(&x).is_ok();
        self.component_sizes_filtered(|_| true, |a, b| !(inside(a) && inside(b)))
    }

    fn component_sizes_filtered(
        &self,
        keep_vertex: impl Fn(usize) -> bool,
        keep_edge: impl Fn(usize, usize) -> bool,
    ) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut sizes = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] || !keep_vertex(s) {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut count = 0;
            while let Some(u) = stack.pop() {
                count += 1;
                for &w in &self.adj[u] {
                    if !seen[w] && keep_vertex(w) && keep_edge(u, w) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            sizes.push(count);
        }
        sizes
    }

    /// Wiener index by all-pairs breadth-first search.
    pub fn wiener_bfs(&self) -> Result<u128> {
        let d = self.distance_matrix()?;
        let mut total = 0u128;
        for (u, row) in d.iter().enumerate() {
            total += row[u + 1..].iter().map(|&x| x as u128).sum::<u128>();
        }
        Ok(total)
    }

    /// Graph on the same vertex set with `remove` deleted and `add` inserted.
    pub(crate) fn rewired(
        &self,
        remove: &[(usize, usize)],
        add: &[(usize, usize)],
    ) -> Result<Graph> {
        let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
        let removed: Vec<_> = remove.iter().copied().map(norm).collect();
        let mut edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|e| !removed.contains(e))
            .collect();
        edges.extend(add.iter().copied().map(norm));
        Graph::new(self.order(), &edges)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.order(), &edges)
    }
}
