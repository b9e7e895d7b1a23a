//! Labeled and unlabeled trees with a prescribed degree sequence.

use std::collections::BTreeMap;

use super::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};

/// Tree from a Prüfer sequence over vertices `0..seq.len() + 2`.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: n,
        });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n)
            .find(|&u| degree[u] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let ends: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((ends[0], ends[1]));
    Graph::new(n, &edges)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All pairwise non-isomorphic trees with degree sequence `ds`, sorted by
/// canonical form. `limit` caps the number of Prüfer sequences visited.
pub fn trees_with_degree_sequence(ds: &DegreeSequence, limit: u128) -> Result<Vec<Graph>> {
    if !ds.is_tree_realizable() {
        return Err(Error::NonRealizable(ds.degrees().to_vec()));
    }
    let n = ds.len();
    if n == 2 {
        return Ok(vec![Graph::new(2, &[(0, 1)])?]);
    }
    let mut word: Vec<usize> = ds
        .degrees()
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d - 1))
        .collect();
    let count = multinomial(&word);
    if count > limit {
        return Err(Error::GuardExceeded {
            what: "Prüfer sequences",
            size: count,
            limit,
        });
    }
    let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    loop {
        let t = tree_from_pruefer(&word)?;
        seen.entry(canonical_form(&t)?).or_insert(t);
        if !next_permutation(&mut word) {
            break;
        }
    }
    Ok(seen.into_values().collect())
}

fn multinomial(word: &[usize]) -> u128 {
    let mut counts = BTreeMap::new();
    for &w in word {
        *counts.entry(w).or_insert(0u128) += 1;
    }
    let mut acc: u128 = 1;
    let mut placed: u128 = 0;
    for &c in counts.values() {
        for i in 1..=c {
            placed += 1;
            acc = acc.saturating_mul(placed) / i;
        }
    }
    acc
}
