//! Closed forms for `SW_k` on special block graph families.

use crate::combinatorics::BinomialTable;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Block orders `b_1 >= ... >= b_t`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockOrderSequence {
    orders: Vec<usize>,
}

impl BlockOrderSequence {
    /// Sorts `orders` non-increasingly.
    pub fn new(mut orders: Vec<usize>) -> Result<Self> {
        if orders.is_empty() || orders.iter().any(|&b| b < 2) {
            return Err(Error::InvalidParameter(format!(
                "block orders must be non-empty and at least 2, got {orders:?}"
            )));
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(BlockOrderSequence { orders })
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn block_count(&self) -> usize {
        self.orders.len()
    }

    /// Order of every connected block graph with these blocks.
    pub fn order(&self) -> usize {
        self.orders.iter().map(|b| b - 1).sum::<usize>() + 1
    }
}

fn check_k(k: usize, max: usize) -> Result<()> {
    if k < 2 || k > max {
        return Err(Error::InvalidK { k, min: 2, max });
    }
    Ok(())
}

/// `(n-1) C(n-1, k-1) - sum_i C(b_i - 1, k)`, the index of the star-like
/// block graph with the given blocks.
pub fn sw_star_like<S: Scalar>(seq: &BlockOrderSequence, k: usize) -> Result<S> {
    let n = seq.order();
    check_k(k, n)?;
    let mut table = BinomialTable::<S>::new();
    let mut total = S::from_count(n - 1)?.mul_checked(&table.binomial(n - 1, k - 1)?)?;
    for &b in &seq.orders {
        total = total.sub_checked(&table.binomial(b - 1, k)?)?;
    }
    Ok(total)
}

/// `SW_k` of the windmill `Wd(r, t)`: `t` copies of `K_r` sharing a vertex.
pub fn sw_windmill<S: Scalar>(r: usize, t: usize, k: usize) -> Result<S> {
    if r < 2 || t < 2 {
        return Err(Error::InvalidParameter(format!(
            "windmill needs r >= 2 and t >= 2, got r={r}, t={t}"
        )));
    }
    let n = t * (r - 1) + 1;
    check_k(k, n)?;
    let mut table = BinomialTable::<S>::new();
    let head = S::from_count(n - 1)?.mul_checked(&table.binomial(n - 1, k - 1)?)?;
    head.sub_checked(&S::from_count(t)?.mul_checked(&table.binomial(r - 1, k)?)?)
}

/// Which right-hand binomial the path-like formula uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathLikeVariant {
    /// Right side of cut vertex `v_i` counted without `v_i`:
    /// `C(n + i - 1 - sum_{j<=i} b_j, k)`.
    Corrected,
    /// `C(n + i - sum_{j<=i} b_j, k)`, which also counts `v_i`.
    Literal,
}

/// `SW_k` of the path-like block graph whose block orders are listed from
/// one pendant block to the other:
///
/// ```text
/// (k-1) C(n,k) + (t-1) C(n-1,k)
///   - sum_{i<t} [ C(P_i - i, k) + C(right_i, k) ],   P_i = b_1 + ... + b_i
/// ```
///
/// Each bracket removes the `k`-sets that lie on one side of cut vertex
/// `v_i` without containing it.
pub fn sw_path_like<S: Scalar>(
    orders_end_to_end: &[usize],
    k: usize,
    variant: PathLikeVariant,
) -> Result<S> {
    let t = orders_end_to_end.len();
    if t < 2 || orders_end_to_end.iter().any(|&b| b < 2) {
        return Err(Error::InvalidParameter(format!(
            "path-like formula needs at least two blocks of order >= 2, got {orders_end_to_end:?}"
        )));
    }
    let n = orders_end_to_end.iter().map(|b| b - 1).sum::<usize>() + 1;
    check_k(k, n - 1)?;
    let mut table = BinomialTable::<S>::new();
    let mut total = S::from_count(k - 1)?
        .mul_checked(&table.binomial(n, k)?)?
        .add_checked(&S::from_count(t - 1)?.mul_checked(&table.binomial(n - 1, k)?)?)?;
    let mut prefix = 0;
    for (idx, &b) in orders_end_to_end[..t - 1].iter().enumerate() {
        let i = idx + 1;
        prefix += b;
        let left = prefix - i;
        let right = match variant {
            PathLikeVariant::Corrected => n + i - 1 - prefix,
            PathLikeVariant::Literal => n + i - prefix,
        };
        total = total
            .sub_checked(&table.binomial(left, k)?)?
            .sub_checked(&table.binomial(right, k)?)?;
    }
    Ok(total)
}

/// `SW_{n-1} = n^2 - n - p` for a block graph with `p` pendant vertices.
pub fn sw_n_minus_1<S: Scalar>(n: usize, p: usize) -> Result<S> {
    if n < 2 || p > n {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2 and p <= n, got n={n}, p={p}"
        )));
    }
    let n_s = S::from_count(n)?;
    n_s.mul_checked(&n_s)?
        .sub_checked(&n_s)?
        .sub_checked(&S::from_count(p)?)
}

/// `SW_n = n - 1` for any connected graph of order `n`.
pub fn sw_full<S: Scalar>(n: usize) -> Result<S> {
    if n < 1 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    S::from_count(n - 1)
}
