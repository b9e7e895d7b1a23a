//! Binomial coefficients and the component-profile sums `N_k` and `N'_k`.
//!
//! For a graph with components of orders `n_1, ..., n_p`, `N_k` counts the
//! `k`-subsets of vertices that meet at least two components, and `N'_k`
//! weights each such subset by the number of components it meets minus one.
//! Both have a composition-sum definition (implemented directly as
//! `*_direct`) and a closed form used on the hot path:
//!
//! ```text
//! N_k  = C(T, k) - sum_i C(n_i, k)
//! N'_k = sum_i [C(T, k) - C(T - n_i, k)] - C(T, k)        T = sum_i n_i
//! ```

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Multiset of component orders. Empty components are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentProfile {
    sizes: Vec<usize>,
    total: usize,
}

impl ComponentProfile {
    pub fn new(sizes: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut sizes: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
        if sizes.is_empty() {
            return Err(Error::InvalidParameter(
                "a component profile needs at least one non-empty component".into(),
            ));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let total = sizes.iter().sum();
        Ok(ComponentProfile { sizes, total })
    }

    /// Profile of the components of `g`, which may be disconnected.
    pub fn of_graph(g: &Graph) -> Result<Self> {
        ComponentProfile::new(g.component_sizes())
    }

    /// Component orders, non-increasing.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn component_count(&self) -> usize {
        self.sizes.len()
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidK {
            k,
            min: 2,
            max: usize::MAX,
        })
    } else {
        Ok(())
    }
}

/// Exact `C(n, k)` by the multiplicative formula; zero when `k > n`.
pub fn binomial<S: Scalar>(n: usize, k: usize) -> Result<S> {
    if k > n {
        return Ok(S::zero());
    }
    let k = k.min(n - k);
    let mut acc = S::one();
    for i in 0..k {
        acc = acc.mul_checked(&S::from_count(n - i)?)? / S::from_count(i + 1)?;
    }
    Ok(acc)
}

/// Pascal triangle grown lazily to the largest `n` requested.
#[derive(Debug, Clone)]
pub struct BinomialTable<S> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> Default for BinomialTable<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> BinomialTable<S> {
    pub fn new() -> Self {
        BinomialTable {
            rows: vec![vec![S::one()]],
        }
    }

    fn grow(&mut self, n: usize) -> Result<()> {
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 always present");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(S::one());
            for w in prev.windows(2) {
                row.push(w[0].add_checked(&w[1])?);
            }
            row.push(S::one());
            self.rows.push(row);
        }
        Ok(())
    }

    pub fn binomial(&mut self, n: usize, k: usize) -> Result<S> {
        if k > n {
            return Ok(S::zero());
        }
        self.grow(n)?;
        Ok(self.rows[n][k].clone())
    }

    /// `N_k` via `C(T, k) - sum_i C(n_i, k)`.
    pub fn n_k(&mut self, profile: &ComponentProfile, k: usize) -> Result<S> {
        check_k(k)?;
        let mut acc = self.binomial(profile.total, k)?;
        for &s in &profile.sizes {
            acc = acc.sub_checked(&self.binomial(s, k)?)?;
        }
        Ok(acc)
    }

    /// `N'_k` via `sum_i [C(T, k) - C(T - n_i, k)] - C(T, k)`.
    pub fn n_prime_k(&mut self, profile: &ComponentProfile, k: usize) -> Result<S> {
        check_k(k)?;
        if profile.sizes.len() == 1 {
            return Ok(S::zero());
        }
        let all = self.binomial(profile.total, k)?;
        let mut acc = S::zero();
        for &s in &profile.sizes {
            let hit = all.sub_checked(&self.binomial(profile.total - s, k)?)?;
            acc = acc.add_checked(&hit)?;
        }
        acc.sub_checked(&all)
    }
}

pub fn n_k<S: Scalar>(profile: &ComponentProfile, k: usize) -> Result<S> {
    BinomialTable::new().n_k(profile, k)
}

pub fn n_prime_k<S: Scalar>(profile: &ComponentProfile, k: usize) -> Result<S> {
    BinomialTable::new().n_prime_k(profile, k)
}

/// Visits every composition `l_1 + ... + l_p = k` with `0 <= l_i < k` and
/// `l_i <= n_i`, passing the binomial product and the number of non-zero
/// parts.
fn for_each_composition<S: Scalar>(
    sizes: &[usize],
    k: usize,
    visit: &mut impl FnMut(S, usize) -> Result<()>,
) -> Result<()> {
    fn rec<S: Scalar>(
        sizes: &[usize],
        k: usize,
        remaining: usize,
        product: S,
        nonzero: usize,
        visit: &mut impl FnMut(S, usize) -> Result<()>,
    ) -> Result<()> {
        let Some((&first, rest)) = sizes.split_first() else {
            return if remaining == 0 {
                visit(product, nonzero)
            } else {
                Ok(())
            };
        };
        let upper = remaining.min(first).min(k - 1);
        for l in 0..=upper {
            let c: S = binomial(first, l)?;
            rec(
                rest,
                k,
                remaining - l,
                product.mul_checked(&c)?,
                nonzero + usize::from(l > 0),
                visit,
            )?;
        }
        Ok(())
    }
    rec(sizes, k, k, S::one(), 0, visit)
}

/// `N_k` by enumerating compositions.
pub fn n_k_direct<S: Scalar>(profile: &ComponentProfile, k: usize) -> Result<S> {
    check_k(k)?;
    let mut acc = S::zero();
    for_each_composition(&profile.sizes, k, &mut |prod: S, _| {
        acc = acc.add_checked(&prod)?;
        Ok(())
    })?;
    Ok(acc)
}

/// `N'_k` by enumerating compositions weighted by (non-zero parts - 1).
pub fn n_prime_k_direct<S: Scalar>(profile: &ComponentProfile, k: usize) -> Result<S> {
    check_k(k)?;
    let mut acc = S::zero();
    for_each_composition(&profile.sizes, k, &mut |prod: S, nonzero| {
        let w = S::from_count(nonzero - 1)?;
        acc = acc.add_checked(&prod.mul_checked(&w)?)?;
        Ok(())
    })?;
    Ok(acc)
}
