//! Polynomial-time evaluation of `SW_k` on block graphs.
//!
//! Four independent routes: summing `N'_k` over block deletions, summing
//! `N_k` over cut-vertex deletions, counting coordinate values of a Hamming
//! labeling, and (for `k = 2, 3`) edge contributions.

mod edge;
mod hamming;

pub use edge::{edge_partition, sw3_edge, sw3_edge_literal, wiener_edge, EdgePartition};
pub use hamming::{
    hamming_labeling, steiner_distance_hamming, sw_hamming, sw_hamming_guarded, HammingLabeling,
};

use crate::combinatorics::{BinomialTable, ComponentProfile};
use crate::error::{Error, Result};
use crate::graph::{block_graph_decomposition, BlockCutDecomposition, Graph};
use crate::scalar::Scalar;

pub(crate) fn check_k(k: usize, n: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::InvalidK { k, min: 2, max: n });
    }
    Ok(())
}

/// `SW_k` as the sum over blocks of `N'_k` of the graph with that block's
/// edges removed.
pub fn sw_block_decomposition<S: Scalar>(g: &Graph, k: usize) -> Result<S> {
    let d = block_graph_decomposition(g)?;
    check_k(k, g.order())?;
    let mut table = BinomialTable::new();
    let mut total = S::zero();
    for block in d.blocks() {
        let profile = ComponentProfile::new(g.component_sizes_without_clique_edges(block))?;
        total = total.add_checked(&table.n_prime_k(&profile, k)?)?;
    }
    Ok(total)
}

/// `SW_k` as `sum_{cut v} N_k(G - v) + (k - 1) C(n, k)`.
pub fn sw_vertex_decomposition<S: Scalar>(g: &Graph, k: usize) -> Result<S> {
    let d = block_graph_decomposition(g)?;
    sw_vertex_decomposition_with(g, &d, k, &mut BinomialTable::new())
}

pub(crate) fn sw_vertex_decomposition_with<S: Scalar>(
    g: &Graph,
    d: &BlockCutDecomposition,
    k: usize,
    table: &mut BinomialTable<S>,
) -> Result<S> {
    let n = g.order();
    check_k(k, n)?;
    let mut total = S::from_count(k - 1)?.mul_checked(&table.binomial(n, k)?)?;
    for &v in d.cut_vertices() {
        let profile = ComponentProfile::new(g.component_sizes_without_vertex(v))?;
        total = total.add_checked(&table.n_k(&profile, k)?)?;
    }
    Ok(total)
}

/// `B_k(v) = N_k(G - v)` on a block graph; zero for pendant vertices.
pub fn steiner_betweenness_blockgraph<S: Scalar>(g: &Graph, v: usize, k: usize) -> Result<S> {
    block_graph_decomposition(g)?;
    g.check_vertex(v)?;
    let n = g.order();
    if k < 2 || k + 1 > n {
        return Err(Error::InvalidK {
            k,
            min: 2,
            max: n.saturating_sub(1),
        });
    }
    let profile = ComponentProfile::new(g.component_sizes_without_vertex(v))?;
    BinomialTable::new().n_k(&profile, k)
}
