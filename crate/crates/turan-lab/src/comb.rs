//! Small combinatorial helpers: binomials and colex subset enumeration.
//!
//! Vertex subsets are bitmasks (`u128`), so the numeric order of masks is
//! exactly the colexicographic order on sets. Every enumeration here is
//! colex-ascending, which is what makes witness tie-breaking deterministic.

/// Binomial coefficient C(n, k). Exact; panics on overflow past u64.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// Iterator over all k-subsets of {0..n-1} as bitmasks, colex-ascending.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    assert!(n < 128, "vertex universe limited to 127");
    if k > n {
        return KSubsets { cur: 0, limit: 0, done: true };
    }
    let first = if k == 0 { 0 } else { (1u128 << k) - 1 };
    KSubsets { cur: first, limit: 1u128 << n, done: false }
}

pub struct KSubsets {
    cur: u128,
    limit: u128,
    done: bool,
}

impl Iterator for KSubsets {
    type Item = u128;

    fn next(&mut self) -> Option<u128> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if out == 0 {
            // the single empty subset
            self.done = true;
            return Some(0);
        }
        // Gosper's hack: next mask with the same popcount
        let c = self.cur & self.cur.wrapping_neg();
        let r = self.cur + c;
        self.cur = (((r ^ self.cur) >> 2) / c) | r;
        if self.cur >= self.limit {
            self.done = true;
        }
        Some(out)
    }
}

/// Ascending list of the set bit positions of `mask`.
pub fn indices_of_mask(mask: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        out.push(b);
        m &= m - 1;
    }
    out
}

/// Bitmask with the given members set.
pub fn mask_from_indices<I: IntoIterator<Item = usize>>(it: I) -> u128 {
    let mut m = 0u128;
    for v in it {
        m |= 1u128 << v;
    }
    m
}

/// The k lowest set bits of `mask` (colex-least k-subset of `mask`).
pub fn lowest_k_bits(mask: u128, k: usize) -> u128 {
    let mut out = 0u128;
    let mut m = mask;
    for _ in 0..k {
        let c = m & m.wrapping_neg();
        out |= c;
        m &= m - 1;
    }
    out
}

/// Call `f` on every k-subset of `mask`, colex-ascending, stopping early
/// when `f` returns `false`. Returns `false` iff stopped early.
pub fn for_each_k_subset_of_mask(mask: u128, k: usize, mut f: impl FnMut(u128) -> bool) -> bool {
    let pos = indices_of_mask(mask);
    if k > pos.len() {
        return true;
    }
    for idx_mask in k_subsets(pos.len(), k) {
        let mut scattered = 0u128;
        let mut m = idx_mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            scattered |= 1u128 << pos[b];
            m &= m - 1;
        }
        if !f(scattered) {
            return false;
        }
    }
    true
}

/// All k-subsets of `mask`, colex-ascending.
pub fn k_subsets_of_mask(mask: u128, k: usize) -> Vec<u128> {
    let mut out = Vec::new();
    for_each_k_subset_of_mask(mask, k, |s| {
        out.push(s);
        true
    });
    out
}

/// Colex rank of an r-subset given as a mask: rank({c_1 < ... < c_r}) =
/// sum C(c_i, i).
pub fn colex_rank(mask: u128) -> u64 {
    let mut rank = 0u64;
    for (i, c) in indices_of_mask(mask).into_iter().enumerate() {
        rank += binomial(c as u64, i as u64 + 1);
    }
    rank
}
