//! Exhaustive enumeration of connected block graphs with a fixed block order
//! sequence.

use std::collections::{BTreeMap, BTreeSet};

use super::canon::{canonical_form, CanonicalForm};
use crate::closed_forms::BlockOrderSequence;
use crate::error::{Error, Result};
use crate::graph::{complete, decompose, Graph};

/// Glue a fresh `K_s` to `g` at vertex `v`.
pub fn attach_clique(g: &Graph, v: usize, s: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    if s < 2 {
        return Err(Error::InvalidParameter(format!(
            "block order must be at least 2, got {s}"
        )));
    }
    let n = g.order();
    let mut edges = g.edges();
    let fresh: Vec<usize> = (n..n + s - 1).collect();
    for (i, &a) in fresh.iter().enumerate() {
        edges.push((v, a));
        for &b in &fresh[i + 1..] {
            edges.push((a, b));
        }
    }
    Graph::new(n + s - 1, &edges)
}

/// All pairwise non-isomorphic connected block graphs whose blocks have the
/// orders in `seq`, sorted by canonical form.
///
/// Blocks are attached one at a time starting from a largest block; `limit`
/// bounds the number of distinct partial graphs kept at any stage.
pub fn enumerate_family(seq: &BlockOrderSequence, limit: usize) -> Result<Vec<Graph>> {
    let orders = seq.orders();
    let mut level: BTreeMap<(CanonicalForm, Vec<usize>), Graph> = BTreeMap::new();
    let first = complete(orders[0]);
    level.insert((canonical_form(&first)?, orders[1..].to_vec()), first);
    for _ in 1..orders.len() {
        let mut next = BTreeMap::new();
        for ((_, remaining), g) in &level {
            let sizes: BTreeSet<usize> = remaining.iter().copied().collect();
            for &s in &sizes {
                let pos = remaining
                    .iter()
                    .position(|&r| r == s)
                    .expect("size taken from remaining");
                let mut rest = remaining.clone();
                rest.remove(pos);
                for v in 0..g.order() {
                    let h = attach_clique(g, v, s)?;
                    check_blocks(&h, seq.orders(), &rest)?;
                    let key = (canonical_form(&h)?, rest.clone());
                    if !next.contains_key(&key) {
                        if next.len() >= limit {
                            return Err(Error::GuardExceeded {
                                what: "partial block graphs per stage",
                                size: next.len() as u128 + 1,
                                limit: limit as u128,
                            });
                        }
                        next.insert(key, h);
                    }
                }
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

fn check_blocks(h: &Graph, all: &[usize], rest: &[usize]) -> Result<()> {
    let mut expected = all.to_vec();
    for r in rest {
        let pos = expected
            .iter()
            .position(|b| b == r)
            .expect("rest is a sub-multiset");
        expected.remove(pos);
    }
    let got = decompose(h)?.block_orders();
    if got != expected {
        return Err(Error::InvalidMove(format!(
            "attachment produced blocks {got:?}, expected {expected:?}"
        )));
    }
    Ok(())
}
