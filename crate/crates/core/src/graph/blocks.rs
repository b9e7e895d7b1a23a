//! Biconnected components, cut vertices and the block-cut tree.

use super::Graph;
use crate::error::{Error, Result};

/// Blocks and cut vertices of a connected graph.
///
/// Blocks are sorted by decreasing order, ties broken by their sorted vertex
/// lists, so the decomposition of a graph is reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutDecomposition {
    blocks: Vec<Vec<usize>>,
    cut_vertices: Vec<usize>,
    pendant_vertices: Vec<usize>,
    vertex_blocks: Vec<Vec<usize>>,
    block_cut_tree: Graph,
}

impl BlockCutDecomposition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    /// Vertices lying in exactly one block.
    pub fn pendant_vertices(&self) -> &[usize] {
        &self.pendant_vertices
    }

    /// Non-increasing block orders `b_1 >= ... >= b_t`.
    pub fn block_orders(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> &[usize] {
        &self.vertex_blocks[v]
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.vertex_blocks[v].len() > 1
    }

    /// Cut vertices contained in block `b`.
    pub fn block_cut_vertices(&self, b: usize) -> Vec<usize> {
        self.blocks[b]
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }

    /// Blocks that are leaves of the block-cut tree. A lone block is not
    /// pendant.
    pub fn pendant_blocks(&self) -> Vec<usize> {
        if self.blocks.len() < 2 {
            return Vec::new();
        }
        (0..self.blocks.len())
            .filter(|&b| self.block_cut_vertices(b).len() == 1)
            .collect()
    }

    /// Block orders read from one pendant block to the other when the
    /// block-cut tree is a path, starting from the lower-indexed end.
    pub fn chain_orders(&self) -> Option<Vec<usize>> {
        let t = self.blocks.len();
        if t == 1 {
            return Some(vec![self.blocks[0].len()]);
        }
        let ends = self.pendant_blocks();
        if ends.len() != 2 {
            return None;
        }
        let tree = &self.block_cut_tree;
        let (mut prev, mut cur) = (usize::MAX, ends[0]);
        let mut out = Vec::with_capacity(t);
        loop {
            if cur < t {
                out.push(self.blocks[cur].len());
            }
            let Some(&next) = tree.neighbors(cur).iter().find(|&&w| w != prev) else {
                break;
            };
            (prev, cur) = (cur, next);
        }
        Some(out)
    }

    /// Pendant vertex of a pendant block.
    pub fn is_leaf(&self, v: usize) -> bool {
        match self.vertex_blocks[v].as_slice() {
            [b] => self.blocks.len() < 2 || self.block_cut_vertices(*b).len() == 1,
            _ => false,
        }
    }

    /// Bipartite tree: nodes `0..t` are blocks, node `t + i` is
    /// `cut_vertices()[i]`.
    pub fn block_cut_tree(&self) -> &Graph {
        &self.block_cut_tree
    }
}

/// Biconnected components by depth-first lowpoints.
pub fn decompose(g: &Graph) -> Result<BlockCutDecomposition> {
    g.require_connected()?;
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut vstack: Vec<usize> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        vstack.push(root);
        // (vertex, parent, next neighbor index)
        let mut frames = vec![(root, usize::MAX, 0usize)];
        while let Some(frame) = frames.last_mut() {
            let (v, parent, idx) = *frame;
            if let Some(&w) = g.neighbors(v).get(idx) {
                frame.2 += 1;
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    vstack.push(w);
                    frames.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let mut block = vec![parent];
                while let Some(x) = vstack.pop() {
                    block.push(x);
                    if x == v {
                        break;
                    }
                }
                block.sort_unstable();
                blocks.push(block);
            }
        }
        vstack.clear();
    }

    blocks.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));

    let mut vertex_blocks = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            vertex_blocks[v].push(i);
        }
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| vertex_blocks[v].len() > 1).collect();
    let pendant_vertices: Vec<usize> = (0..n).filter(|&v| vertex_blocks[v].len() == 1).collect();

    let t = blocks.len();
    let mut tree_edges = Vec::new();
    for (i, &c) in cut_vertices.iter().enumerate() {
        tree_edges.extend(vertex_blocks[c].iter().map(|&b| (b, t + i)));
    }
    let block_cut_tree = Graph::new(t + cut_vertices.len(), &tree_edges)?;

    Ok(BlockCutDecomposition {
        blocks,
        cut_vertices,
        pendant_vertices,
        vertex_blocks,
        block_cut_tree,
    })
}

fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

pub fn is_block_graph(g: &Graph) -> Result<bool> {
    Ok(decompose(g)?.blocks().iter().all(|b| is_clique(g, b)))
}

/// Decomposes `g`, failing with the first non-clique block.
pub fn block_graph_decomposition(g: &Graph) -> Result<BlockCutDecomposition> {
    let d = decompose(g)?;
    if let Some(b) = d.blocks().iter().find(|b| !is_clique(g, b)) {
        return Err(Error::NotBlockGraph { block: b.clone() });
    }
    Ok(d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub is_star_like: bool,
    pub is_path_like: bool,
    pub is_claw_free: bool,
    pub pendant_blocks: Vec<usize>,
}

/// Structural class of a connected block graph. A single clique counts as
/// path-like: it is the line graph of a star, which is a caterpillar.
pub fn classify(g: &Graph, d: &BlockCutDecomposition) -> Classification {
    let n = g.order();
    let pendant_blocks = d.pendant_blocks();
    Classification {
        is_star_like: (0..n).any(|v| g.degree(v) + 1 == n),
        is_path_like: d.block_count() == 1 || pendant_blocks.len() == 2,
        is_claw_free: d.cut_vertices().iter().all(|&c| d.blocks_of(c).len() == 2),
        pendant_blocks,
    }
}
