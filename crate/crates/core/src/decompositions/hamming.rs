use crate::error::{Error, Result};
use crate::graph::{BlockCutDecomposition, Graph};
use crate::oracle::Guards;
use crate::scalar::Scalar;
use crate::subsets::{members, Combinations};

/// Isometric embedding of a block graph into the Hamming graph
/// `K_{b_1} x ... x K_{b_t}`: one coordinate per block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HammingLabeling {
    coords: Vec<Vec<usize>>,
    block_orders: Vec<usize>,
}

impl HammingLabeling {
    /// Coordinate tuple of `v`; position `i` encodes block `i` of the
    /// decomposition the labeling was built from.
    pub fn coords(&self, v: usize) -> &[usize] {
        &self.coords[v]
    }

    pub fn dimension(&self) -> usize {
        self.block_orders.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    /// Order of the clique factor for each coordinate.
    pub fn block_orders(&self) -> &[usize] {
        &self.block_orders
    }

    pub fn hamming_distance(&self, u: usize, v: usize) -> usize {
        self.coords[u]
            .iter()
            .zip(&self.coords[v])
            .filter(|(a, b)| a != b)
            .count()
    }
}

/// Within block `i` the vertices get values `0..b_i` by ascending id; every
/// other vertex copies the value of the block vertex in its component of
/// the graph with block `i`'s edges removed.
pub fn hamming_labeling(g: &Graph, d: &BlockCutDecomposition) -> Result<HammingLabeling> {
    g.require_connected()?;
    let n = g.order();
    let t = d.block_count();
    let mut coords = vec![vec![0usize; t]; n];
    for (i, block) in d.blocks().iter().enumerate() {
        let in_block = |x: usize| block.binary_search(&x).is_ok();
        for (a, &u) in block.iter().enumerate() {
            if block[a + 1..].iter().any(|&w| !g.has_edge(u, w)) {
                return Err(Error::NotBlockGraph {
                    block: block.clone(),
                });
            }
        }
        let mut assigned = vec![false; n];
        for (value, &root) in block.iter().enumerate() {
            let mut stack = vec![root];
            assigned[root] = true;
            while let Some(u) = stack.pop() {
                coords[u][i] = value;
                for &w in g.neighbors(u) {
                    if !assigned[w] && !(in_block(u) && in_block(w)) {
                        assigned[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        if assigned.iter().any(|&a| !a) {
            return Err(Error::InvalidParameter(
                "decomposition does not match the graph".into(),
            ));
        }
    }
    Ok(HammingLabeling {
        coords,
        block_orders: d.block_orders(),
    })
}

/// `d(S) = sum_i l_i(S) - t`, where `l_i(S)` is the number of distinct
/// values of coordinate `i` over `S`.
pub fn steiner_distance_hamming(lab: &HammingLabeling, s: &[usize]) -> Result<usize> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() < 2 {
        return Err(Error::InvalidParameter(
            "need at least two distinct vertices".into(),
        ));
    }
    if let Some(&v) = s.iter().find(|&&v| v >= lab.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: lab.vertex_count(),
        });
    }
    Ok(distance_of(lab, &s))
}

fn distance_of(lab: &HammingLabeling, s: &[usize]) -> usize {
    let mut sum = 0;
    let mut seen: Vec<usize> = Vec::with_capacity(s.len());
    for i in 0..lab.dimension() {
        seen.clear();
        seen.extend(s.iter().map(|&v| lab.coords[v][i]));
        seen.sort_unstable();
        seen.dedup();
        sum += seen.len() - 1;
    }
    sum
}

/// Sum of Hamming Steiner distances over all `k`-subsets, default guards.
pub fn sw_hamming<S: Scalar>(g: &Graph, k: usize) -> Result<S> {
    sw_hamming_guarded(g, k, &Guards::default())
}

pub fn sw_hamming_guarded<S: Scalar>(g: &Graph, k: usize, guards: &Guards) -> Result<S> {
    let d = crate::graph::block_graph_decomposition(g)?;
    let n = g.order();
    super::check_k(k, n)?;
    guards.check_subsets(n, k)?;
    if n >= 64 {
        return Err(Error::GuardExceeded {
            what: "graph order",
            size: n as u128,
            limit: 63,
        });
    }
    let lab = hamming_labeling(g, &d)?;
    let mut total: u128 = 0;
    let mut s = Vec::with_capacity(k);
    for mask in Combinations::new(n, k) {
        s.clear();
        s.extend(members(mask));
        total += distance_of(&lab, &s) as u128;
    }
    S::from_u128(total).ok_or(Error::Overflow)
}
