//! Exact Steiner distances, minimum Steiner tree enumeration and brute-force
//! Steiner indices. Everything here is exponential and guarded.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;
use crate::subsets::{count_subsets, mask_of, members, Combinations};

/// Size limits for the exponential routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest terminal set handed to the Dreyfus-Wagner recursion.
    pub max_terminals: usize,
    /// Largest graph order for exact Steiner distances.
    pub max_order: usize,
    /// Largest graph order for Steiner tree enumeration.
    pub max_enumeration_order: usize,
    /// Largest number of `k`-subsets summed by brute force.
    pub max_subsets: u128,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_terminals: 8,
            max_order: 20,
            max_enumeration_order: 14,
            max_subsets: 1_000_000,
        }
    }
}

impl Guards {
    pub(crate) fn check_subsets(&self, n: usize, k: usize) -> Result<()> {
        let size = count_subsets(n, k);
        if size > self.max_subsets {
            return Err(Error::GuardExceeded {
                what: "number of k-subsets",
                size,
                limit: self.max_subsets,
            });
        }
        Ok(())
    }

    fn check(&self, what: &'static str, size: usize, limit: usize) -> Result<()> {
        if size > limit {
            return Err(Error::GuardExceeded {
                what,
                size: size as u128,
                limit: limit as u128,
            });
        }
        Ok(())
    }
}

/// Minimum Steiner trees of one terminal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerResult {
    pub terminals: Vec<usize>,
    /// Edge count of a minimum Steiner tree.
    pub distance: usize,
    /// Number of distinct minimum Steiner trees (as labeled subtrees of the
    /// graph).
    pub tree_count: u64,
    /// `inner_counts[v]`: trees containing `v` as a non-terminal vertex.
    pub inner_counts: Vec<u64>,
}

/// Exact Steiner machinery under a set of [`Guards`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Oracle {
    pub guards: Guards,
}

fn normalize_terminals(g: &Graph, s: &[usize]) -> Result<Vec<usize>> {
    let mut t = s.to_vec();
    t.sort_unstable();
    t.dedup();
    for &v in &t {
        g.check_vertex(v)?;
    }
    if t.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "a Steiner terminal set needs at least two distinct vertices, got {s:?}"
        )));
    }
    Ok(t)
}

impl Oracle {
    pub fn new(guards: Guards) -> Self {
        Oracle { guards }
    }

    /// Dreyfus-Wagner over subsets of the terminals on unit edge weights.
    pub fn steiner_distance(&self, g: &Graph, s: &[usize]) -> Result<usize> {
        let terminals = normalize_terminals(g, s)?;
        self.guards
            .check("graph order", g.order(), self.guards.max_order)?;
        self.guards
            .check("terminal count", terminals.len(), self.guards.max_terminals)?;
        let dist = g.distance_matrix()?;
        Ok(dreyfus_wagner(&dist, &terminals))
    }

    /// Sum of Steiner distances over all `k`-subsets.
    pub fn sw_bruteforce<S: Scalar>(&self, g: &Graph, k: usize) -> Result<S> {
        let n = g.order();
        check_k_range(k, n)?;
        self.guards.check_subsets(n, k)?;
        self.guards
            .check("graph order", n, self.guards.max_order.min(63))?;
        if k > self.guards.max_terminals {
            return Err(Error::GuardExceeded {
                what: "terminal count",
                size: k as u128,
                limit: self.guards.max_terminals as u128,
            });
        }
        let dist = g.distance_matrix()?;
        let mut total: u128 = 0;
        let mut terminals = Vec::with_capacity(k);
        for mask in Combinations::new(n, k) {
            terminals.clear();
            terminals.extend(members(mask));
            total += dreyfus_wagner(&dist, &terminals) as u128;
        }
        S::from_u128(total).ok_or(Error::Overflow)
    }

    /// Enumerates all minimum Steiner trees for `s`: every vertex superset
    /// `U` of `s` with `|U| = d(S) + 1` and connected induced subgraph, and
    /// every spanning tree of `G[U]`.
    pub fn enumerate_steiner_trees(&self, g: &Graph, s: &[usize]) -> Result<SteinerResult> {
        self.guards
            .check("graph order", g.order(), self.guards.max_enumeration_order)?;
        let distance = self.steiner_distance(g, s)?;
        let terminals = normalize_terminals(g, s)?;
        let (tree_count, inner_counts) = count_min_trees(g, &terminals, distance);
        Ok(SteinerResult {
            terminals,
            distance,
            tree_count,
            inner_counts,
        })
    }

    /// `B_k(v)` = sum over `k`-subsets `A` avoiding `v` of
    /// `sigma_A(v) / sigma_A`, as an exact rational.
    pub fn betweenness_bruteforce<S: Scalar>(
        &self,
        g: &Graph,
        v: usize,
        k: usize,
    ) -> Result<Ratio<S>> {
        g.check_vertex(v)?;
        Ok(self.betweenness_all::<S>(g, k)?.swap_remove(v))
    }

    /// `B_k` for every vertex in one pass over the `k`-subsets.
    pub fn betweenness_all<S: Scalar>(&self, g: &Graph, k: usize) -> Result<Vec<Ratio<S>>> {
        let n = g.order();
        check_k_range(k, n)?;
        self.guards
            .check("graph order", n, self.guards.max_enumeration_order)?;
        self.guards.check_subsets(n, k)?;
        self.guards
            .check("terminal count", k, self.guards.max_terminals)?;
        let dist = g.distance_matrix()?;
        let mut acc = vec![Ratio::from_integer(S::zero()); n];
        let mut terminals = Vec::with_capacity(k);
        for mask in Combinations::new(n, k) {
            terminals.clear();
            terminals.extend(members(mask));
            let d = dreyfus_wagner(&dist, &terminals);
            let (count, inner) = count_min_trees(g, &terminals, d);
            let denom = S::from_u64(count).ok_or(Error::Overflow)?;
            for (v, &c) in inner.iter().enumerate() {
                if c > 0 {
                    let num = S::from_u64(c).ok_or(Error::Overflow)?;
                    acc[v] = acc[v].clone() + Ratio::new(num, denom.clone());
                }
            }
        }
        Ok(acc)
    }
}

fn check_k_range(k: usize, n: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::InvalidK { k, min: 2, max: n });
    }
    Ok(())
}

/// Steiner distance with default guards.
pub fn steiner_distance(g: &Graph, s: &[usize]) -> Result<usize> {
    Oracle::default().steiner_distance(g, s)
}

/// Brute-force `SW_k` with default guards.
pub fn sw_bruteforce<S: Scalar>(g: &Graph, k: usize) -> Result<S> {
    Oracle::default().sw_bruteforce(g, k)
}

pub fn enumerate_steiner_trees(g: &Graph, s: &[usize]) -> Result<SteinerResult> {
    Oracle::default().enumerate_steiner_trees(g, s)
}

pub fn betweenness_bruteforce<S: Scalar>(g: &Graph, v: usize, k: usize) -> Result<Ratio<S>> {
    Oracle::default().betweenness_bruteforce(g, v, k)
}

fn dreyfus_wagner(dist: &[Vec<usize>], terminals: &[usize]) -> usize {
    let n = dist.len();
    if terminals.len() == 2 {
        return dist[terminals[0]][terminals[1]];
    }
    let (root, rest) = terminals.split_first().expect("at least two terminals");
    let m = rest.len();
    let full = (1usize << m) - 1;
    // best[mask][v]: cheapest tree spanning the terminals in `mask` plus `v`
    let mut best = vec![vec![usize::MAX; n]; full + 1];
    for (i, &t) in rest.iter().enumerate() {
        best[1 << i].clone_from(&dist[t]);
    }
    for mask in 1..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut row = vec![usize::MAX; n];
        // split at v
        let mut sub = (mask - 1) & mask;
        while sub > 0 {
            if sub < (mask ^ sub) {
                let (a, b) = (&best[sub], &best[mask ^ sub]);
                for v in 0..n {
                    row[v] = row[v].min(a[v] + b[v]);
                }
            }
            sub = (sub - 1) & mask;
        }
        // then move the junction along shortest paths
        let mut relaxed = row.clone();
        for (u, &ru) in row.iter().enumerate() {
            for v in 0..n {
                relaxed[v] = relaxed[v].min(ru + dist[u][v]);
            }
        }
        best[mask] = relaxed;
    }
    best[full][*root]
}

/// Counts spanning trees of `G[U]` over all valid `U`, and per-vertex inner
/// memberships.
fn count_min_trees(g: &Graph, terminals: &[usize], distance: usize) -> (u64, Vec<u64>) {
    let n = g.order();
    let term_mask = mask_of(terminals);
    let others: Vec<usize> = (0..n).filter(|v| term_mask >> v & 1 == 0).collect();
    let extra = distance + 1 - terminals.len();
    let mut total = 0u64;
    let mut inner = vec![0u64; n];
    for pick in Combinations::new(others.len(), extra) {
        let mut vertices: Vec<usize> = terminals.to_vec();
        vertices.extend(members(pick).map(|i| others[i]));
        vertices.sort_unstable();
        let trees = count_spanning_trees_with_terminal_leaves(g, &vertices, term_mask);
        if trees == 0 {
            continue;
        }
        total += trees;
        for i in members(pick) {
            inner[others[i]] += trees;
        }
    }
    (total, inner)
}

/// Spanning trees of the induced subgraph on `vertices` (edge subsets of
/// size `|U| - 1` without a cycle). Each one is checked to have all leaves
/// among the terminals, which holds automatically for minimum `U`.
fn count_spanning_trees_with_terminal_leaves(g: &Graph, vertices: &[usize], term_mask: u64) -> u64 {
    let local = |v: usize| vertices.binary_search(&v).expect("vertex in U");
    let edges: Vec<(usize, usize)> = vertices
        .iter()
        .flat_map(|&u| {
            g.neighbors(u)
                .iter()
                .filter(move |&&w| u < w)
                .filter(|&&w| vertices.binary_search(&w).is_ok())
                .map(move |&w| (u, w))
        })
        .collect();
    let need = vertices.len() - 1;
    if edges.len() < need {
        return 0;
    }
    let mut count = 0;
    let mut parent = vec![0usize; vertices.len()];
    let mut degree = vec![0usize; vertices.len()];
    for pick in Combinations::new(edges.len(), need) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        degree.iter_mut().for_each(|d| *d = 0);
        let mut acyclic = true;
        for e in members(pick) {
            let (a, b) = (local(edges[e].0), local(edges[e].1));
            degree[a] += 1;
            degree[b] += 1;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                acyclic = false;
                break;
            }
            parent[ra] = rb;
        }
        if !acyclic {
            continue;
        }
        let leaves_ok = vertices
            .iter()
            .enumerate()
            .all(|(i, &v)| degree[i] != 1 || term_mask >> v & 1 == 1);
        debug_assert!(leaves_ok, "minimum Steiner tree with a non-terminal leaf");
        if leaves_ok {
            count += 1;
        }
    }
    count
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, path_like, star, windmill};
    use num_bigint::BigInt;

    #[test]
    fn distance_examples() {
        assert_eq!(steiner_distance(&complete(3), &[0, 1, 2]), Ok(2));
        let illus = path_like(&[3, 2, 4]).unwrap();
        assert_eq!(steiner_distance(&illus, &[0, 1, 4, 5]), Ok(5));
        assert_eq!(steiner_distance(&path(4), &[0, 3]), Ok(3));
    }

    #[test]
    fn distance_guards_and_errors() {
        let o = Oracle::new(Guards {
            max_terminals: 3,
            ..Guards::default()
        });
        assert!(matches!(
            o.steiner_distance(&path(6), &[0, 1, 2, 3]),
            Err(Error::GuardExceeded {
                what: "terminal count",
                ..
            })
        ));
        assert!(steiner_distance(&path(3), &[1]).is_err());
        assert!(steiner_distance(&path(3), &[1, 7]).is_err());
        assert!(matches!(
            steiner_distance(&path(21), &[0, 1]),
            Err(Error::GuardExceeded {
                what: "graph order",
                ..
            })
        ));
    }

    #[test]
    fn sw_examples() {
        assert_eq!(sw_bruteforce::<i64>(&path(3), 3), Ok(2));
        assert_eq!(sw_bruteforce::<i64>(&windmill(3, 2).unwrap(), 2), Ok(14));
        assert_eq!(sw_bruteforce::<i64>(&path(4), 3), Ok(10));
        assert_eq!(
            sw_bruteforce::<BigInt>(&complete(4), 3),
            Ok(BigInt::from(8))
        );
        assert!(matches!(
            sw_bruteforce::<i64>(&path(4), 5),
            Err(Error::InvalidK { .. })
        ));
        let tight = Oracle::new(Guards {
            max_subsets: 10,
            ..Guards::default()
        });
        assert!(matches!(
            tight.sw_bruteforce::<i64>(&path(6), 3),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn tree_enumeration_examples() {
        let r = enumerate_steiner_trees(&complete(3), &[0, 1, 2]).unwrap();
        assert_eq!((r.distance, r.tree_count), (2, 3));
        assert!(r.inner_counts.iter().all(|&c| c == 0));

        let r = enumerate_steiner_trees(&path(3), &[0, 2]).unwrap();
        assert_eq!((r.distance, r.tree_count), (2, 1));
        assert_eq!(r.inner_counts, vec![0, 1, 0]);

        // bowtie: triangles {0,1,2} and {0,3,4}
        let bowtie = windmill(3, 2).unwrap();
        let r = enumerate_steiner_trees(&bowtie, &[1, 2, 3]).unwrap();
        assert_eq!(r.distance, 3);
        assert_eq!(r.inner_counts[0], r.tree_count);
    }

    #[test]
    fn k4_tree_counts() {
        // 16 spanning trees of K4, all minimum for the full terminal set
        let r = enumerate_steiner_trees(&complete(4), &[0, 1, 2, 3]).unwrap();
        assert_eq!((r.distance, r.tree_count), (3, 16));
    }

    #[test]
    fn betweenness_examples() {
        assert_eq!(
            betweenness_bruteforce::<i64>(&path(3), 1, 2),
            Ok(Ratio::from_integer(1))
        );
        let bowtie = windmill(3, 2).unwrap();
        assert_eq!(
            betweenness_bruteforce::<i64>(&bowtie, 0, 2),
            Ok(Ratio::from_integer(4))
        );
        for k in 2..=4 {
            assert_eq!(
                betweenness_bruteforce::<i64>(&bowtie, 3, k),
                Ok(Ratio::from_integer(0))
            );
            assert_eq!(
                betweenness_bruteforce::<i64>(&star(5), 2, k),
                Ok(Ratio::from_integer(0))
            );
        }
    }

    #[test]
    fn non_block_graph_betweenness_is_fractional() {
        // C4: the two opposite vertices split the pair {0,2}
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(
            betweenness_bruteforce::<i64>(&c4, 1, 2),
            Ok(Ratio::new(1, 2))
        );
    }

    #[test]
    fn pair_distance_is_geodesic() {
        let g = path_like(&[3, 2, 4]).unwrap();
        for u in 0..7 {
            for v in u + 1..7 {
                assert_eq!(
                    steiner_distance(&g, &[u, v]).unwrap(),
                    g.geodesic_distance(u, v).unwrap()
                );
            }
        }
    }
}
