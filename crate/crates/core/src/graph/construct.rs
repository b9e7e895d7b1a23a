//! Graph constructions: standard families, line graphs of trees, greedy
//! trees, caterpillars and random block graphs.

use std::collections::VecDeque;

use rand::Rng;

use super::Graph;
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        edges.extend((u + 1..n).map(|v| (u, v)));
    }
    Graph::new(n, &edges).expect("complete graph edges are valid")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).expect("path edges are valid")
}

/// Star on `n` vertices with center 0.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::new(n, &edges).expect("star edges are valid")
}

/// Block graph whose blocks all share vertex 0.
pub fn star_like(orders: &[usize]) -> Result<Graph> {
    check_orders(orders)?;
    let mut edges = Vec::new();
    let mut next = 1;
    for &b in orders {
        let block: Vec<usize> = std::iter::once(0).chain(next..next + b - 1).collect();
        push_clique(&mut edges, &block);
        next += b - 1;
    }
    Graph::new(next, &edges)
}

/// `t` copies of `K_r` glued at vertex 0.
pub fn windmill(r: usize, t: usize) -> Result<Graph> {
    if r < 2 || t < 1 {
        return Err(Error::InvalidParameter(format!(
            "windmill needs r >= 2, t >= 1 (got r={r}, t={t})"
        )));
    }
    star_like(&vec![r; t])
}

/// Chain of cliques with the given orders, listed from one end block to the
/// other. Consecutive blocks share one vertex; vertex ids increase along the
/// chain.
pub fn path_like(orders: &[usize]) -> Result<Graph> {
    check_orders(orders)?;
    let mut edges = Vec::new();
    let mut start = 0;
    for &b in orders {
        let block: Vec<usize> = (start..start + b).collect();
        push_clique(&mut edges, &block);
        start += b - 1;
    }
    Graph::new(start + 1, &edges)
}

fn check_orders(orders: &[usize]) -> Result<()> {
    if orders.is_empty() || orders.iter().any(|&b| b < 2) {
        return Err(Error::InvalidParameter(format!(
            "block orders must be non-empty and at least 2, got {orders:?}"
        )));
    }
    Ok(())
}

fn push_clique(edges: &mut Vec<(usize, usize)>, block: &[usize]) {
    for (i, &u) in block.iter().enumerate() {
        edges.extend(block[i + 1..].iter().map(|&v| (u, v)));
    }
}

/// Line graph of a tree. Vertex `i` of the result is the `i`-th edge of
/// `tree.edges()`.
pub fn line_graph(tree: &Graph) -> Result<Graph> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let edges = tree.edges();
    let mut incident = vec![Vec::new(); tree.order()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut out = Vec::new();
    for list in &incident {
        push_clique(&mut out, list);
    }
    Graph::new(edges.len(), &out)
}

/// Degree sequence, kept non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::InvalidParameter(format!(
                "degrees must be positive, got {degrees:?}"
            )));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence { degrees })
    }

    pub fn of_graph(g: &Graph) -> Result<Self> {
        DegreeSequence::new(g.degrees())
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn is_tree_realizable(&self) -> bool {
        let n = self.degrees.len();
        n >= 2 && self.degrees.iter().sum::<usize>() == 2 * (n - 1)
    }

    /// Degrees of the non-leaf vertices.
    pub fn inner_degrees(&self) -> Vec<usize> {
        self.degrees.iter().copied().filter(|&d| d >= 2).collect()
    }

    /// All tree-realizable sequences on `n` vertices.
    pub fn all_for_trees(n: usize) -> Vec<DegreeSequence> {
        fn rec(
            remaining: usize,
            slots: usize,
            cap: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if slots == 0 {
                if remaining == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            if remaining < slots {
                return;
            }
            for d in (1..=cap.min(remaining - (slots - 1))).rev() {
                cur.push(d);
                rec(remaining - d, slots - 1, d, cur, out);
                cur.pop();
            }
        }
        if n < 2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        rec(2 * (n - 1), n, n - 1, &mut Vec::new(), &mut out);
        out.into_iter()
            .map(|degrees| DegreeSequence { degrees })
            .collect()
    }
}

/// A greedy tree with its planted level structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTree {
    pub graph: Graph,
    /// `levels[i]` lists the vertices at distance `i` from the root, left to
    /// right.
    pub levels: Vec<Vec<usize>>,
}

/// Greedy tree: the root takes the largest degree and vertices are created
/// breadth-first, each taking the next largest remaining degree. Equal
/// degrees fill the leftmost open slot first.
pub fn greedy_tree(ds: &DegreeSequence) -> Result<GreedyTree> {
    if !ds.is_tree_realizable() || ds.degrees[0] < 2 {
        return Err(Error::NonRealizable(ds.degrees.clone()));
    }
    let n = ds.len();
    let mut edges = Vec::with_capacity(n - 1);
    let mut level_of = vec![0usize; n];
    let mut queue = VecDeque::from([0usize]);
    let mut next = 1;
    while let Some(v) = queue.pop_front() {
        let children = if v == 0 {
            ds.degrees[0]
        } else {
            ds.degrees[v] - 1
        };
        for _ in 0..children {
            edges.push((v, next));
            level_of[next] = level_of[v] + 1;
            queue.push_back(next);
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    let depth = level_of.iter().max().copied().unwrap_or(0);
    let mut levels = vec![Vec::new(); depth + 1];
    for (v, &l) in level_of.iter().enumerate() {
        levels[l].push(v);
    }
    Ok(GreedyTree {
        graph: Graph::new(n, &edges)?,
        levels,
    })
}

/// Caterpillar whose backbone vertices `0..m` carry the given degrees.
/// Leaves are numbered after the backbone.
pub fn caterpillar(backbone_degrees: &[usize]) -> Result<Graph> {
    let m = backbone_degrees.len();
    if m == 0 || backbone_degrees.iter().any(|&d| d < 2) {
        return Err(Error::InvalidParameter(format!(
            "caterpillar backbone degrees must be >= 2, got {backbone_degrees:?}"
        )));
    }
    let mut edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
    let mut next = m;
    for (i, &d) in backbone_degrees.iter().enumerate() {
        let spine = usize::from(i > 0) + usize::from(i + 1 < m);
        for _ in 0..d - spine {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::new(next, &edges)
}

/// Random connected block graph on at most `max_order` vertices with blocks
/// of order at most `max_block`, grown by gluing cliques at random vertices.
pub fn random_block_graph<R: Rng + ?Sized>(
    rng: &mut R,
    max_order: usize,
    max_block: usize,
) -> Result<Graph> {
    if max_order < 2 || max_block < 2 {
        return Err(Error::InvalidParameter(
            "random block graph needs order and block size >= 2".into(),
        ));
    }
    let target = rng.gen_range(2..=max_order);
    let first = rng.gen_range(2..=max_block.min(target));
    let mut edges = Vec::new();
    push_clique(&mut edges, &(0..first).collect::<Vec<_>>());
    let mut n = first;
    while n < target {
        let b = rng.gen_range(2..=max_block.min(target - n + 1));
        let at = rng.gen_range(0..n);
        let block: Vec<usize> = std::iter::once(at).chain(n..n + b - 1).collect();
        push_clique(&mut edges, &block);
        n += b - 1;
    }
    Graph::new(n, &edges)
}
