use num_rational::Ratio;

use crate::combinatorics::BinomialTable;
use crate::error::{Error, Result};
use crate::graph::{block_graph_decomposition, Graph};
use crate::scalar::{integral, Scalar};

/// Sizes of the three distance classes of an edge `ab`: vertices closer to
/// `a`, closer to `b`, and equidistant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgePartition {
    pub a: usize,
    pub b: usize,
    pub n_ab: usize,
    pub n_ba: usize,
    pub a_n_b: usize,
}

pub fn edge_partition(g: &Graph, a: usize, b: usize) -> Result<EdgePartition> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if !g.has_edge(a, b) {
        return Err(Error::InvalidParameter(format!(
            "({a}, {b}) is not an edge"
        )));
    }
    let da = g.distances_from(a);
    let db = g.distances_from(b);
    let (mut n_ab, mut n_ba, mut a_n_b) = (0, 0, 0);
    for (x, y) in da.iter().zip(&db) {
        match (x, y) {
            (Some(x), Some(y)) if x < y => n_ab += 1,
            (Some(x), Some(y)) if x > y => n_ba += 1,
            (Some(_), Some(_)) => a_n_b += 1,
            _ => return Err(Error::Disconnected),
        }
    }
    Ok(EdgePartition {
        a,
        b,
        n_ab,
        n_ba,
        a_n_b,
    })
}

fn partitions(g: &Graph) -> Result<Vec<EdgePartition>> {
    block_graph_decomposition(g)?;
    g.edges()
        .into_iter()
        .map(|(a, b)| edge_partition(g, a, b))
        .collect()
}

fn count<S: Scalar>(x: usize) -> Result<S> {
    S::from_count(x)
}

/// Wiener index as `sum_{ab} N_ab * N_ba`.
pub fn wiener_edge<S: Scalar>(g: &Graph) -> Result<S> {
    let mut total = S::zero();
    for p in partitions(g)? {
        total = total.add_checked(&count::<S>(p.n_ab)?.mul_checked(&count(p.n_ba)?)?)?;
    }
    Ok(total)
}

fn triple_sum<S: Scalar>(parts: &[EdgePartition]) -> Result<S> {
    let mut total = S::zero();
    for p in parts {
        let term = count::<S>(p.n_ab)?
            .mul_checked(&count(p.n_ba)?)?
            .mul_checked(&count(p.a_n_b)?)?;
        total = total.add_checked(&term)?;
    }
    Ok(total)
}

/// `sum N_ab N_ba + 2/3 sum N_ab N_ba aN_b`, evaluated exactly as written.
///
/// This expression is not `SW_3`: its first term is the Wiener index, which
/// counts pairs rather than triples (5 instead of 2 on `K_3`, 4 instead of 2
/// on `P_3`). Kept to document that gap; use [`sw3_edge`] for the value.
pub fn sw3_edge_literal<S: Scalar>(g: &Graph) -> Result<S> {
    let parts = partitions(g)?;
    super::check_k(3, g.order())?;
    let wiener = Ratio::from_integer(wiener_edge::<S>(g)?);
    let two_thirds = Ratio::new(count::<S>(2)?, count(3)?);
    let total = wiener + two_thirds * Ratio::from_integer(triple_sum::<S>(&parts)?);
    integral(&total)
}

/// `SW_3` by edge contributions:
/// `sum_{ab} [C(n,3) - C(n - N_ab, 3) - C(n - N_ba, 3) + C(aN_b, 3)]
///  - 1/3 sum_{ab} N_ab N_ba aN_b`.
///
/// The bracket counts triples meeting both `W_ab` and `W_ba` by
/// inclusion-exclusion; triples inside the equidistant class are subtracted
/// twice and so are added back once.
pub fn sw3_edge<S: Scalar>(g: &Graph) -> Result<S> {
    let parts = partitions(g)?;
    let n = g.order();
    super::check_k(3, n)?;
    let mut table = BinomialTable::<S>::new();
    let all = table.binomial(n, 3)?;
    let mut sum = S::zero();
    for p in &parts {
        let term = all
            .sub_checked(&table.binomial(n - p.n_ab, 3)?)?
            .sub_checked(&table.binomial(n - p.n_ba, 3)?)?
            .add_checked(&table.binomial(p.a_n_b, 3)?)?;
        sum = sum.add_checked(&term)?;
    }
    let third = Ratio::new(S::one(), count(3)?);
    let total = Ratio::from_integer(sum) - third * Ratio::from_integer(triple_sum::<S>(&parts)?);
    integral(&total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, windmill};
    use num_bigint::BigInt;

    #[test]
    fn partition_examples() {
        let p3 = path(3);
        let e = edge_partition(&p3, 0, 1).unwrap();
        assert_eq!((e.n_ab, e.n_ba, e.a_n_b), (1, 2, 0));
        let e = edge_partition(&complete(3), 0, 1).unwrap();
        assert_eq!((e.n_ab, e.n_ba, e.a_n_b), (1, 1, 1));
        let bowtie = windmill(3, 2).unwrap();
        let e = edge_partition(&bowtie, 0, 1).unwrap();
        assert_eq!((e.n_ab, e.n_ba, e.a_n_b), (3, 1, 1));
        assert!(edge_partition(&p3, 0, 2).is_err());
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(wiener_edge::<i64>(&complete(3)), Ok(3));
        assert_eq!(wiener_edge::<i64>(&path(4)), Ok(10));
        assert_eq!(
            wiener_edge::<BigInt>(&windmill(3, 2).unwrap()),
            Ok(BigInt::from(14))
        );
    }

    #[test]
    fn literal_form_discrepancies() {
        assert_eq!(sw3_edge_literal::<i64>(&complete(3)), Ok(5));
        assert_eq!(sw3_edge_literal::<i64>(&path(3)), Ok(4));
        assert_eq!(sw3_edge_literal::<i64>(&path(4)), Ok(10));
    }

    #[test]
    fn sw3_examples() {
        assert_eq!(sw3_edge::<i64>(&complete(3)), Ok(2));
        assert_eq!(sw3_edge::<i64>(&path(3)), Ok(2));
        assert_eq!(sw3_edge::<i64>(&windmill(3, 2).unwrap()), Ok(24));
        assert!(matches!(
            sw3_edge::<i64>(&path(2)),
            Err(Error::InvalidK { .. })
        ));
    }

    #[test]
    fn equidistant_triples_are_added_back() {
        // Subtracting C(aN_b, 3) instead undercounts by 2 * C(3, 3) per
        // rim edge of the bowtie: 20 rather than 24.
        let bowtie = windmill(3, 2).unwrap();
        let rim = edge_partition(&bowtie, 1, 2).unwrap();
        assert_eq!(rim.a_n_b, 3);
        assert_eq!(sw3_edge::<i64>(&bowtie), Ok(24));
        assert_eq!(sw3_edge::<i64>(&complete(5)), Ok(20));
    }

    #[test]
    fn literal_can_be_non_integral() {
        // K4: W = 6, triple sum = 6 * 2 = 12, 6 + 8 = 14 is integral; K5 gives
        // 10 + (2/3) * 30 = 30. Any block graph yields a multiple of 3 in the
        // triple sum, so the integrality check is a guard, not a filter.
        assert_eq!(sw3_edge_literal::<i64>(&complete(4)), Ok(14));
        assert_eq!(sw3_edge_literal::<i64>(&complete(5)), Ok(30));
    }
}
