//! Min/max scans over block graph families and over trees with a fixed
//! degree sequence.

use std::collections::BTreeSet;

use super::canon::{canonical_form, CanonicalForm};
use super::family::enumerate_family;
use super::trees::trees_with_degree_sequence;
use crate::closed_forms::{sw_star_like, BlockOrderSequence};
use crate::decompositions::sw_vertex_decomposition;
use crate::error::{Error, Result};
use crate::graph::{
    block_graph_decomposition, caterpillar, classify, greedy_tree, line_graph, DegreeSequence,
    Graph,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow<S> {
    pub canonical: CanonicalForm,
    pub graph: Graph,
    pub value: S,
    pub is_star_like: bool,
    pub is_path_like: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport<S> {
    pub k: usize,
    pub rows: Vec<ScanRow<S>>,
    pub min_value: S,
    pub min_graphs: Vec<CanonicalForm>,
    pub max_value: S,
    pub max_graphs: Vec<CanonicalForm>,
    /// `(n-1) C(n-1, k-1) - sum_i C(b_i - 1, k)`.
    pub lower_bound: S,
    /// The minimum equals the bound and the single star-like member
    /// attains it.
    pub min_at_star_like: bool,
    /// Exactly one member attains the minimum.
    pub min_unique: bool,
    /// Some path-like member attains the maximum.
    pub max_at_path_like: bool,
}

/// Evaluates `SW_k` on every member of the family.
pub fn extremal_scan<S: Scalar>(
    seq: &BlockOrderSequence,
    k: usize,
    limit: usize,
) -> Result<ExtremalReport<S>> {
    let family = enumerate_family(seq, limit)?;
    let mut rows: Vec<ScanRow<S>> = Vec::with_capacity(family.len());
    for g in family {
        let d = block_graph_decomposition(&g)?;
        let c = classify(&g, &d);
        rows.push(ScanRow {
            canonical: canonical_form(&g)?,
            value: sw_vertex_decomposition(&g, k)?,
            is_star_like: c.is_star_like,
            is_path_like: c.is_path_like,
            graph: g,
        });
    }
    let min_value = rows
        .iter()
        .map(|r| r.value.clone())
        .min()
        .expect("families are non-empty");
    let max_value = rows
        .iter()
        .map(|r| r.value.clone())
        .max()
        .expect("families are non-empty");
    let at = |v: &S| {
        rows.iter()
            .filter(|r| &r.value == v)
            .map(|r| r.canonical.clone())
            .collect::<Vec<_>>()
    };
    let (min_graphs, max_graphs) = (at(&min_value), at(&max_value));
    let lower_bound = sw_star_like(seq, k)?;
    let stars: Vec<&ScanRow<S>> = rows.iter().filter(|r| r.is_star_like).collect();
    let min_at_star_like =
        min_value == lower_bound && stars.len() == 1 && stars[0].value == min_value;
    let min_unique = min_graphs.len() == 1;
    let max_at_path_like = rows.iter().any(|r| r.value == max_value && r.is_path_like);
    Ok(ExtremalReport {
        k,
        rows,
        min_value,
        min_graphs,
        max_value,
        max_graphs,
        lower_bound,
        min_at_star_like,
        min_unique,
        max_at_path_like,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuckleyReport {
    pub order: usize,
    pub w_tree: u128,
    pub w_line_graph: u128,
    /// `W(L(T)) = W(T) - C(n, 2)`.
    pub identity_holds: bool,
}

pub fn buckley_check(t: &Graph) -> Result<BuckleyReport> {
    let lt = line_graph(t)?;
    let n = t.order() as u128;
    let w_tree = t.wiener_bfs()?;
    let w_line_graph = lt.wiener_bfs()?;
    Ok(BuckleyReport {
        order: t.order(),
        w_tree,
        w_line_graph,
        identity_holds: w_tree.checked_sub(n * (n - 1) / 2) == Some(w_line_graph),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemMode {
    /// `SW_k` of the trees themselves.
    Trees,
    /// `SW_k` of their line graphs.
    LineGraphs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemRow<S> {
    /// Canonical form of the tree (not of its line graph).
    pub canonical: CanonicalForm,
    pub tree: Graph,
    pub value: S,
    pub is_greedy: bool,
    pub is_caterpillar: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemReport<S> {
    pub degrees: Vec<usize>,
    pub k: usize,
    pub mode: ProblemMode,
    pub rows: Vec<ProblemRow<S>>,
    pub min_value: S,
    pub max_value: S,
    pub greedy_value: S,
    pub greedy_is_min: bool,
    /// Best caterpillar over all orderings of the inner degrees along the
    /// backbone.
    pub caterpillar_value: S,
    pub caterpillar_is_max: bool,
    /// A minimizer when the greedy tree is not one.
    pub min_counterexample: Option<Graph>,
    /// A maximizer when no caterpillar is one.
    pub max_counterexample: Option<Graph>,
}

/// Largest tree order `problem_scan` accepts.
pub const PROBLEM_MAX_ORDER: usize = 10;

pub fn problem_scan<S: Scalar>(
    ds: &DegreeSequence,
    k: usize,
    mode: ProblemMode,
) -> Result<ProblemReport<S>> {
    let n = ds.len();
    if n > PROBLEM_MAX_ORDER {
        return Err(Error::GuardExceeded {
            what: "tree order",
            size: n as u128,
            limit: PROBLEM_MAX_ORDER as u128,
        });
    }
    let eval = |t: &Graph| -> Result<S> {
        match mode {
            ProblemMode::Trees => sw_vertex_decomposition(t, k),
            ProblemMode::LineGraphs => sw_vertex_decomposition(&line_graph(t)?, k),
        }
    };
    let trees = trees_with_degree_sequence(ds, 10_000_000)?;
    let greedy = if n == 2 {
        trees[0].clone()
    } else {
        greedy_tree(ds)?.graph
    };
    let greedy_form = canonical_form(&greedy)?;
    let mut rows: Vec<ProblemRow<S>> = Vec::with_capacity(trees.len());
    for t in trees {
        rows.push(ProblemRow {
            canonical: canonical_form(&t)?,
            value: eval(&t)?,
            is_greedy: false,
            is_caterpillar: is_caterpillar(&t),
            tree: t,
        });
    }
    for r in rows.iter_mut() {
        r.is_greedy = r.canonical == greedy_form;
    }
    let min_value = rows
        .iter()
        .map(|r| r.value.clone())
        .min()
        .expect("realizable sequences have trees");
    let max_value = rows
        .iter()
        .map(|r| r.value.clone())
        .max()
        .expect("realizable sequences have trees");
    let greedy_value = eval(&greedy)?;
    let mut caterpillar_value: Option<S> = None;
    for backbone in backbone_orderings(&ds.inner_degrees()) {
        let c = if backbone.is_empty() {
            greedy.clone()
        } else {
            caterpillar(&backbone)?
        };
        let v = eval(&c)?;
        if caterpillar_value.as_ref().is_none_or(|best| v > *best) {
            caterpillar_value = Some(v);
        }
    }
    let caterpillar_value = caterpillar_value.expect("at least one backbone ordering");
    let greedy_is_min = greedy_value == min_value;
    let caterpillar_is_max = caterpillar_value == max_value;
    let pick = |v: &S| rows.iter().find(|r| &r.value == v).map(|r| r.tree.clone());
    Ok(ProblemReport {
        degrees: ds.degrees().to_vec(),
        k,
        mode,
        min_counterexample: if greedy_is_min {
            None
        } else {
            pick(&min_value)
        },
        max_counterexample: if caterpillar_is_max {
            None
        } else {
            pick(&max_value)
        },
        rows,
        min_value,
        max_value,
        greedy_value,
        greedy_is_min,
        caterpillar_value,
        caterpillar_is_max,
    })
}

/// Distinct orderings of `degrees`; a single empty ordering for no degrees.
fn backbone_orderings(degrees: &[usize]) -> Vec<Vec<usize>> {
    let mut v = degrees.to_vec();
    v.sort_unstable();
    let mut out = BTreeSet::new();
    loop {
        out.insert(v.clone());
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            break;
        };
        let j = (i..v.len())
            .rev()
            .find(|&j| v[j] > v[i - 1])
            .expect("pivot has a successor");
        v.swap(i - 1, j);
        v[i..].reverse();
    }
    out.into_iter().collect()
}

/// A tree whose non-leaf vertices induce a path (or nothing).
pub fn is_caterpillar(t: &Graph) -> bool {
    if !t.is_tree() {
        return false;
    }
    let inner: Vec<usize> = (0..t.order()).filter(|&v| t.degree(v) > 1).collect();
    inner
        .iter()
        .all(|&v| t.neighbors(v).iter().filter(|&&w| t.degree(w) > 1).count() <= 2)
}
