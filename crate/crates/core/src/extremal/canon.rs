//! Isomorphism-invariant encoding of block graphs.
//!
//! A connected block graph is determined up to isomorphism by its block-cut
//! tree with every block node labeled by its order, so the canonical form is
//! the AHU encoding of that labeled tree, rooted at its center (the smaller
//! encoding when there are two centers).

use std::fmt;

use crate::error::Result;
use crate::graph::{block_graph_decomposition, Graph};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.order() <= 1 {
        return Ok(CanonicalForm(format!("v{}", g.order())));
    }
    let d = block_graph_decomposition(g)?;
    let tree = d.block_cut_tree();
    let t = d.block_count();
    let labels: Vec<String> = (0..tree.order())
        .map(|node| {
            if node < t {
                format!("b{}", d.blocks()[node].len())
            } else {
                "c".to_string()
            }
        })
        .collect();
    let best = tree_centers(tree)
        .into_iter()
        .map(|root| encode(tree, &labels, root, usize::MAX))
        .min()
        .expect("a non-empty tree has a center");
    Ok(CanonicalForm(best))
}

fn encode(tree: &Graph, labels: &[String], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = tree
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(tree, labels, w, v))
        .collect();
    children.sort_unstable();
    let mut out = String::with_capacity(
        2 + labels[v].len() + children.iter().map(String::len).sum::<usize>(),
    );
    out.push('(');
    out.push_str(&labels[v]);
    for c in children {
        out.push_str(&c);
    }
    out.push(')');
    out
}

/// One or two central vertices, found by peeling leaves.
fn tree_centers(tree: &Graph) -> Vec<usize> {
    let n = tree.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = tree.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in tree.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}
