//! Subsets of a small ground set `{0, ..., n}` stored as bitmasks.

/// A subset of the ground set; bit `i` set means `i` belongs to the subset.
pub type Mask = u32;

/// Largest ground set a [`Mask`] can index while keeping rank tables practical.
pub const MAX_GROUND: usize = 24;

pub fn full(n1: usize) -> Mask {
    if n1 >= 32 {
        Mask::MAX
    } else {
        (1u32 << n1) - 1
    }
}

pub fn singleton(i: usize) -> Mask {
    1 << i
}

pub fn contains(mask: Mask, i: usize) -> bool {
    mask >> i & 1 == 1
}

pub fn card(mask: Mask) -> usize {
    mask.count_ones() as usize
}

pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

pub fn from_elems(elems: &[usize]) -> Mask {
    elems.iter().fold(0, |m, &i| m | 1 << i)
}

pub fn elems(mask: Mask) -> Vec<usize> {
    iter(mask).collect()
}

/// Elements of `mask` in increasing order.
pub fn iter(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Relabels the elements of `mask ∩ within` by their rank inside `within`,
/// so the result is a subset of `{0, ..., |within| - 1}`.
pub fn compress(mask: Mask, within: Mask) -> Mask {
    let mut out = 0;
    for (k, i) in iter(within).enumerate() {
        if contains(mask, i) {
            out |= 1 << k;
        }
    }
    out
}

/// Inverse of [`compress`]: sends bit `k` to the `k`-th element of `within`.
pub fn expand(mask: Mask, within: Mask) -> Mask {
    let mut out = 0;
    for (k, i) in iter(within).enumerate() {
        if contains(mask, k) {
            out |= 1 << i;
        }
    }
    out
}

/// All subsets of `mask` (including the empty set and `mask` itself).
pub fn subsets(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut sub = Some(mask);
    std::iter::from_fn(move || {
        let cur = sub?;
        sub = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}
