//! Generalized block shifts.
//!
//! A shift takes a beneficiary `x` and a candidate `y`, detaches every block
//! at `y` that does not lie on the `x`-`y` geodesic, and glues those blocks to
//! `x` instead. The image has the same block order sequence.

use std::collections::BTreeSet;

use super::canon::canonical_form;
use crate::combinatorics::BinomialTable;
use crate::decompositions::{hamming_labeling, steiner_distance_hamming};
use crate::error::{Error, Result};
use crate::graph::{block_graph_decomposition, classify, BlockCutDecomposition, Graph};
use crate::scalar::Scalar;
use crate::subsets::{members, Combinations};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbsMove {
    /// Beneficiary.
    pub x: usize,
    /// Candidate.
    pub y: usize,
    /// Neighbour of `y` on the geodesic towards `x`.
    pub z: usize,
    /// Geodesic `x = c_1, ..., c_q = y`.
    pub path: Vec<usize>,
    /// Vertices separated from `y` by `x`.
    pub set_a: Vec<usize>,
    /// Vertices separated from `x` by `y`.
    pub set_b: Vec<usize>,
    /// Neighbours of `y` that move over to `x`.
    pub moved: Vec<usize>,
    /// Neither `x` nor `y` is a leaf of the source graph.
    pub proper: bool,
}

impl GbsMove {
    /// Validates the shift `(x, y)` on the block graph `g`.
    pub fn new(g: &Graph, x: usize, y: usize) -> Result<GbsMove> {
        let d = block_graph_decomposition(g)?;
        Self::with_decomposition(g, &d, x, y)
    }

    fn with_decomposition(
        g: &Graph,
        d: &BlockCutDecomposition,
        x: usize,
        y: usize,
    ) -> Result<GbsMove> {
        g.check_vertex(x)?;
        g.check_vertex(y)?;
        if x == y {
            return Err(Error::InvalidMove(format!(
                "beneficiary and candidate coincide at {x}"
            )));
        }
        let path = geodesic(g, x, y)?;
        let q = path.len();
        for w in path.windows(2) {
            let b = shared_block(d, w[0], w[1]);
            let cuts = d.block_cut_vertices(b).len();
            if cuts != 2 {
                return Err(Error::InvalidMove(format!(
                    "path block {:?} has {cuts} cut vertices",
                    d.blocks()[b]
                )));
            }
        }
        if let Some(&c) = path[1..q - 1].iter().find(|&&c| d.blocks_of(c).len() != 2) {
            return Err(Error::InvalidMove(format!(
                "path vertex {c} lies in {} blocks",
                d.blocks_of(c).len()
            )));
        }
        let z = path[q - 2];
        let last = &d.blocks()[shared_block(d, z, y)];
        let moved: Vec<usize> = g
            .neighbors(y)
            .iter()
            .copied()
            .filter(|w| !last.contains(w))
            .collect();
        if moved.is_empty() {
            return Err(Error::InvalidMove(format!(
                "candidate {y} has no blocks off the path"
            )));
        }
        let set_a = separated(g, x, y);
        let set_b = separated(g, y, x);
        Ok(GbsMove {
            x,
            y,
            z,
            proper: !d.is_leaf(x) && !d.is_leaf(y),
            path,
            set_a,
            set_b,
            moved,
        })
    }

    /// Number of vertices on the geodesic, `q`.
    pub fn q(&self) -> usize {
        self.path.len()
    }
}

fn geodesic(g: &Graph, x: usize, y: usize) -> Result<Vec<usize>> {
    let dist = g.distances_from(y);
    let mut cur = x;
    let mut out = vec![x];
    let Some(mut left) = dist[x] else {
        return Err(Error::Disconnected);
    };
    while left > 0 {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| dist[w] == Some(left - 1))
            .expect("a BFS predecessor exists");
        out.push(cur);
        left -= 1;
    }
    Ok(out)
}

fn shared_block(d: &BlockCutDecomposition, u: usize, v: usize) -> usize {
    *d.blocks_of(u)
        .iter()
        .find(|b| d.blocks_of(v).contains(b))
        .expect("adjacent vertices share a block")
}

/// Vertices other than `cut` that lose contact with `other` once `cut` is
/// deleted.
fn separated(g: &Graph, cut: usize, other: usize) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    seen[cut] = true;
    seen[other] = true;
    let mut stack = vec![other];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..g.order()).filter(|&v| !seen[v]).collect()
}

/// Applies a shift, checking that the block order sequence is unchanged.
pub fn gbs_apply(g: &Graph, mv: &GbsMove) -> Result<Graph> {
    let d = block_graph_decomposition(g)?;
    let fresh = GbsMove::with_decomposition(g, &d, mv.x, mv.y)?;
    if &fresh != mv {
        return Err(Error::InvalidMove(
            "move was built for a different graph".into(),
        ));
    }
    let remove: Vec<_> = mv.moved.iter().map(|&w| (mv.y, w)).collect();
    let add: Vec<_> = mv.moved.iter().map(|&w| (mv.x, w)).collect();
    let h = g.rewired(&remove, &add)?;
    let image = block_graph_decomposition(&h)
        .map_err(|e| Error::InvalidMove(format!("image is not a block graph: {e}")))?;
    if image.block_orders() != d.block_orders() {
        return Err(Error::InvalidMove(
            "image changed the block order sequence".into(),
        ));
    }
    Ok(h)
}

/// `(q - 1) sum_{l1 + l2 = k, 0 < l1, l2 < k} C(a, l1) C(b, l2)`.
pub fn gbs_difference<S: Scalar>(a_size: usize, b_size: usize, q: usize, k: usize) -> Result<S> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "q must be at least 2, got {q}"
        )));
    }
    if k < 2 {
        return Err(Error::InvalidK {
            k,
            min: 2,
            max: usize::MAX,
        });
    }
    let mut table = BinomialTable::<S>::new();
    let mut sum = S::zero();
    for l1 in 1..k {
        let term = table
            .binomial(a_size, l1)?
            .mul_checked(&table.binomial(b_size, k - l1)?)?;
        sum = sum.add_checked(&term)?;
    }
    S::from_count(q - 1)?.mul_checked(&sum)
}

/// Exact `SW_k(source) - SW_k(image)` for a shift.
///
/// Splits every `k`-set into its parts in `A`, in `B` and in the remaining
/// vertices `M`; only sets meeting `B` change, and the change is a Steiner
/// distance difference inside `M`.
pub fn gbs_drop_exact<S: Scalar>(g: &Graph, mv: &GbsMove, k: usize) -> Result<S> {
    let d = block_graph_decomposition(g)?;
    crate::decompositions::check_k(k, g.order())?;
    let lab = hamming_labeling(g, &d)?;
    let outside: BTreeSet<usize> = mv.set_a.iter().chain(&mv.set_b).copied().collect();
    let middle: Vec<usize> = (0..g.order()).filter(|v| !outside.contains(v)).collect();
    if middle.len() >= 64 {
        return Err(Error::GuardExceeded {
            what: "middle region",
            size: middle.len() as u128,
            limit: 63,
        });
    }
    let dist = |s: &[usize]| -> Result<usize> {
        let distinct: BTreeSet<_> = s.iter().collect();
        if distinct.len() < 2 {
            Ok(0)
        } else {
            steiner_distance_hamming(&lab, s)
        }
    };
    let (x, y) = (mv.x, mv.y);
    let mut table = BinomialTable::<S>::new();
    let mut total = S::zero();
    for m in 0..k.min(middle.len() + 1) {
        // with parts in both A and B, and with a part in B only
        let mut both: i128 = 0;
        let mut b_only: i128 = 0;
        for mask in Combinations::new(middle.len(), m) {
            let mut s: Vec<usize> = members(mask).map(|i| middle[i]).collect();
            let n_s = s.len();
            s.push(x);
            let with_x = dist(&s)? as i128;
            s.push(y);
            both += dist(&s)? as i128 - with_x;
            s.truncate(n_s);
            s.push(y);
            b_only += dist(&s)? as i128 - with_x;
        }
        let both = S::from_i128(both).ok_or(Error::Overflow)?;
        let b_only = S::from_i128(b_only).ok_or(Error::Overflow)?;
        let rest = k - m;
        for a in 1..rest {
            let w = table
                .binomial(mv.set_a.len(), a)?
                .mul_checked(&table.binomial(mv.set_b.len(), rest - a)?)?;
            total = total.add_checked(&w.mul_checked(&both)?)?;
        }
        let w = table.binomial(mv.set_b.len(), rest)?;
        total = total.add_checked(&w.mul_checked(&b_only)?)?;
    }
    Ok(total)
}

/// Every valid proper shift of `g`, ordered by `(x, y)`.
pub fn proper_moves(g: &Graph) -> Result<Vec<GbsMove>> {
    let d = block_graph_decomposition(g)?;
    let mut out = Vec::new();
    for &y in d.cut_vertices() {
        for x in 0..g.order() {
            if x == y {
                continue;
            }
            match GbsMove::with_decomposition(g, &d, x, y) {
                Ok(mv) if mv.proper => out.push(mv),
                Ok(_) | Err(Error::InvalidMove(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    out.sort_by_key(|mv| (mv.x, mv.y));
    Ok(out)
}

/// A graph together with a proper shift whose image is the graph asked about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbsWitness {
    pub source: Graph,
    pub mv: GbsMove,
}

/// Looks for a non-isomorphic block graph `G'` and a proper shift taking it
/// to `g` (up to isomorphism). Path-like graphs have none, and neither do
/// some claw-free ones, such as `K_4` with a pendant edge at every vertex.
///
/// The search undoes a shift: `y` must lie in a single block of `g`, and a
/// nonempty set of blocks at `x` away from `y` is handed back to `y`.
pub fn gbs_preimage_exists(g: &Graph) -> Result<Option<GbsWitness>> {
    let d = block_graph_decomposition(g)?;
    let target = canonical_form(g)?;
    if classify(g, &d).is_path_like {
        return Ok(None);
    }
    for x in 0..g.order() {
        for y in 0..g.order() {
            if x == y || d.blocks_of(y).len() != 1 {
                continue;
            }
            let path = geodesic(g, x, y)?;
            let toward = shared_block(&d, x, path[1]);
            let spare: Vec<usize> = d
                .blocks_of(x)
                .iter()
                .copied()
                .filter(|&b| b != toward)
                .collect();
            if spare.len() >= 32 {
                return Err(Error::GuardExceeded {
                    what: "blocks at a vertex",
                    size: spare.len() as u128,
                    limit: 31,
                });
            }
            for pick in 1u64..(1 << spare.len()) {
                let handed: Vec<usize> = members(pick)
                    .flat_map(|i| d.blocks()[spare[i]].iter().copied())
                    .filter(|&w| w != x)
                    .collect();
                let remove: Vec<_> = handed.iter().map(|&w| (x, w)).collect();
                let add: Vec<_> = handed.iter().map(|&w| (y, w)).collect();
                let source = g.rewired(&remove, &add)?;
                let Ok(mv) = GbsMove::new(&source, x, y) else {
                    continue;
                };
                if !mv.proper || canonical_form(&source)? == target {
                    continue;
                }
                if canonical_form(&gbs_apply(&source, &mv)?)? == target {
                    return Ok(Some(GbsWitness { source, mv }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, path_like, star, windmill};
    use crate::oracle::sw_bruteforce;

    #[test]
    fn p4_to_star() {
        let p4 = path(4);
        let mv = GbsMove::new(&p4, 1, 2).unwrap();
        assert!(mv.proper);
        assert_eq!(
            (mv.set_a.clone(), mv.set_b.clone(), mv.q()),
            (vec![0], vec![3], 2)
        );
        let s = gbs_apply(&p4, &mv).unwrap();
        assert_eq!(
            canonical_form(&s).unwrap(),
            canonical_form(&star(4)).unwrap()
        );
        assert_eq!(
            sw_bruteforce::<i64>(&p4, 2).unwrap() - sw_bruteforce::<i64>(&s, 2).unwrap(),
            1
        );
        assert_eq!(gbs_drop_exact::<i64>(&p4, &mv, 2).unwrap(), 1);
    }

    #[test]
    fn invalid_moves() {
        let bowtie = windmill(3, 2).unwrap();
        assert!(matches!(
            GbsMove::new(&bowtie, 0, 0),
            Err(Error::InvalidMove(_))
        ));
        // the triangle at 1 has a single cut vertex
        assert!(matches!(
            GbsMove::new(&bowtie, 1, 0),
            Err(Error::InvalidMove(_))
        ));
        // leaf candidate: nothing to move
        assert!(matches!(
            GbsMove::new(&path(4), 1, 3),
            Err(Error::InvalidMove(_))
        ));
        // a leaf beneficiary sits in a pendant block, which has one cut vertex
        assert!(matches!(
            GbsMove::new(&path(4), 0, 2),
            Err(Error::InvalidMove(_))
        ));
    }

    #[test]
    fn difference_formula() {
        assert_eq!(gbs_difference::<i64>(1, 1, 2, 2).unwrap(), 1);
        assert_eq!(gbs_difference::<i64>(1, 1, 2, 3).unwrap(), 0);
        assert_eq!(gbs_difference::<i64>(2, 2, 3, 2).unwrap(), 8);
        assert_eq!(gbs_difference::<i64>(0, 5, 4, 3).unwrap(), 0);
        assert!(gbs_difference::<i64>(1, 1, 1, 2).is_err());
    }

    #[test]
    fn seven_vertex_tree_shift() {
        // A = {0, 1} behind x = 2, path 2-3-4, B = {5, 6} behind y = 4
        let g = Graph::new(7, &[(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        let mv = GbsMove::new(&g, 2, 4).unwrap();
        assert_eq!((mv.set_a.len(), mv.set_b.len(), mv.q()), (2, 2, 3));
        let h = gbs_apply(&g, &mv).unwrap();
        let drop = sw_bruteforce::<i64>(&g, 2).unwrap() - sw_bruteforce::<i64>(&h, 2).unwrap();
        assert_eq!(drop, 8);
        assert_eq!(gbs_difference::<i64>(2, 2, 3, 2).unwrap(), drop);
    }

    #[test]
    fn exact_drop_matches_oracle_where_formula_does_not() {
        let p5 = path(5);
        let mv = GbsMove::new(&p5, 1, 2).unwrap();
        let h = gbs_apply(&p5, &mv).unwrap();
        let drop = sw_bruteforce::<i64>(&p5, 3).unwrap() - sw_bruteforce::<i64>(&h, 3).unwrap();
        assert_eq!(drop, 3);
        assert_eq!(gbs_drop_exact::<i64>(&p5, &mv, 3).unwrap(), 3);
        assert_eq!(
            gbs_difference::<i64>(mv.set_a.len(), mv.set_b.len(), mv.q(), 3).unwrap(),
            1
        );
    }

    #[test]
    fn exact_drop_on_block_graphs() {
        for g in [
            path_like(&[3, 2, 4]).unwrap(),
            path_like(&[2, 3, 3, 2]).unwrap(),
            path(6),
        ] {
            for mv in proper_moves(&g).unwrap() {
                let h = gbs_apply(&g, &mv).unwrap();
                for k in 2..=g.order() {
                    let drop =
                        sw_bruteforce::<i64>(&g, k).unwrap() - sw_bruteforce::<i64>(&h, k).unwrap();
                    assert_eq!(
                        gbs_drop_exact::<i64>(&g, &mv, k).unwrap(),
                        drop,
                        "{mv:?} k={k}"
                    );
                    assert!(drop >= 0);
                }
            }
        }
    }

    #[test]
    fn preimages() {
        let w = gbs_preimage_exists(&star(4))
            .unwrap()
            .expect("star has a preimage");
        let img = gbs_apply(&w.source, &w.mv).unwrap();
        assert_eq!(
            canonical_form(&img).unwrap(),
            canonical_form(&star(4)).unwrap()
        );
        assert_eq!(
            canonical_form(&w.source).unwrap(),
            canonical_form(&path(4)).unwrap()
        );
        assert!(gbs_preimage_exists(&complete(4)).unwrap().is_none());
        assert!(gbs_preimage_exists(&path_like(&[3, 2, 4]).unwrap())
            .unwrap()
            .is_none());
        // triangle with a pendant edge at each corner: every cut vertex lies
        // in two blocks, yet three pendant blocks
        let net = Graph::new(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let w = gbs_preimage_exists(&net)
            .unwrap()
            .expect("net has a preimage");
        assert_eq!(
            canonical_form(&gbs_apply(&w.source, &w.mv).unwrap()).unwrap(),
            canonical_form(&net).unwrap()
        );
    }
}
