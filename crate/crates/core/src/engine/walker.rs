//! Permutation enumeration with incrementally maintained lex-first bases.
//!
//! When `σ` advances lexicographically only the suffix from the pivot
//! changes, and the greedy basis restricted to the unchanged prefix stays
//! the same. Each matroid keeps its partial greedy bases for every prefix
//! length, so a step only redoes the greedy from the pivot on.

use crate::matroid::subset::Mask;
use crate::matroid::{Matroid, Perm};

pub struct BasisWalker<'a> {
    mats: &'a [Matroid],
    sigma: Perm,
    /// `prefix[m][k]` is the greedy basis of matroid `m` after `k` elements.
    prefix: Vec<Vec<Mask>>,
    bases: Vec<Mask>,
    remaining: u64,
}

impl<'a> BasisWalker<'a> {
    /// Walks `count` permutations starting at the `start`-th one.
    pub fn new(mats: &'a [Matroid], n1: usize, start: u64, count: u64) -> Self {
        let sigma = Perm::unrank(n1, start);
        let mut w = BasisWalker {
            mats,
            sigma,
            prefix: vec![vec![0; n1 + 1]; mats.len()],
            bases: vec![0; mats.len()],
            remaining: count,
        };
        w.redo_from(0);
        w
    }

    fn redo_from(&mut self, pos: usize) {
        let n1 = self.sigma.len();
        for (mi, m) in self.mats.iter().enumerate() {
            let pre = &mut self.prefix[mi];
            for k in pos..n1 {
                let b = pre[k];
                let e = self.sigma.at(k);
                pre[k + 1] = if m.rk(b | 1 << e) > b.count_ones() as usize {
                    b | 1 << e
                } else {
                    b
                };
            }
            self.bases[mi] = pre[n1];
        }
    }

    /// The current permutation and bases, then advances. Returns `None`
    /// once `count` permutations have been produced.
    pub fn next_with<R>(&mut self, f: impl FnOnce(&Perm, &[Mask]) -> R) -> Option<R> {
        if self.remaining == 0 {
            return None;
        }
        let out = f(&self.sigma, &self.bases);
        self.remaining -= 1;
        if self.remaining > 0 {
            let pivot = self.sigma.advance().expect("range stays within S_n");
            self.redo_from(pivot);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_naive_greedy() {
        let mats = vec![
            Matroid::uniform(2, 5).unwrap(),
            Matroid::from_basis_lists(5, &[vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3]])
                .unwrap(),
        ];
        let mut w = BasisWalker::new(&mats, 5, 7, 100);
        let mut seen = 0;
        while let Some(()) = w.next_with(|s, b| {
            for (m, &bm) in mats.iter().zip(b) {
                assert_eq!(m.lex_first_basis(s), bm);
            }
        }) {
            seen += 1;
        }
        assert_eq!(seen, 100);
    }
}
