//! Fixed-size subset iteration over bitmasks.

/// All `k`-element subsets of `0..n` as bitmasks, in increasing numeric order.
#[derive(Clone, Debug)]
pub struct KSubsets {
    cur: u128,
    limit: u128,
    done: bool,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        debug_assert!(n <= 64);
        KSubsets {
            cur: (1u128 << k) - 1,
            limit: 1u128 << n,
            done: k > n,
        }
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if out == 0 {
            self.done = true;
        } else {
            // Gosper's hack: next larger integer with the same popcount.
            let c = out & out.wrapping_neg();
            let r = out + c;
            self.cur = (((r ^ out) >> 2) / c) | r;
            self.done = self.cur >= self.limit;
        }
        Some(out as u64)
    }
}

/// Places the bits of `bits` onto the positions listed in `slots`: bit `i` of
/// `bits` becomes bit `slots[i]` of the result.
#[inline]
pub fn spread(mut bits: u64, slots: &[usize]) -> u64 {
    let mut out = 0u64;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= 1u64 << slots[i];
    }
    out
}

/// `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
