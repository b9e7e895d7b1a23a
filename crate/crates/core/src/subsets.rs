//! Fixed-size subset enumeration over small ground sets.

/// Iterates over all `k`-element subsets of `0..n` as bitmasks, in
/// increasing numeric order (Gosper's hack).
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    next: Option<u64>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n < 64, "ground set too large for a u64 mask");
        let next = if k > n {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some((1u64 << k) - 1)
        };
        Combinations { n, next }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            if nxt >> self.n != 0 {
                None
            } else {
                Some(nxt)
            }
        };
        Some(cur)
    }
}

/// Vertices of a mask, ascending.
pub fn members(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

/// Exact `C(n, k)` as `u128`, saturating; used only for guard checks.
pub fn count_subsets(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
