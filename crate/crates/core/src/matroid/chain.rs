use super::subset::{self, full, is_subset, Mask};
use crate::error::{Error, Result};

/// A strictly nested chain `∅ ⊊ S_1 ⊊ ... ⊊ S_k ⊊ E`, i.e. a cone of the
/// permutohedral fan.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    sets: Vec<Mask>,
    n1: usize,
}

impl Chain {
    pub fn new(sets: Vec<Mask>, n1: usize) -> Result<Self> {
        let g = full(n1);
        for (i, &s) in sets.iter().enumerate() {
            if s == 0 || s == g || !is_subset(s, g) {
                return Err(Error::InvalidArgument(format!(
                    "chain member {:?} is not a nonempty proper subset",
                    subset::elems(s)
                )));
            }
            if i > 0 && (sets[i - 1] == s || !is_subset(sets[i - 1], s)) {
                return Err(Error::InvalidArgument(
                    "chain is not strictly nested".into(),
                ));
            }
        }
        Ok(Chain { sets, n1 })
    }

    pub(crate) fn new_unchecked(sets: Vec<Mask>, n1: usize) -> Self {
        Chain { sets, n1 }
    }

    pub fn empty(n1: usize) -> Self {
        Chain { sets: vec![], n1 }
    }

    pub fn sets(&self) -> &[Mask] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    /// Consecutive pairs `(S_i, S_{i+1})` with `S_0 = ∅` and `S_{k+1} = E`;
    /// the factors of the boundary stratum are indexed by these gaps.
    pub fn gaps(&self) -> Vec<(Mask, Mask)> {
        let mut bounds = Vec::with_capacity(self.sets.len() + 2);
        bounds.push(0);
        bounds.extend_from_slice(&self.sets);
        bounds.push(full(self.n1));
        bounds.windows(2).map(|w| (w[0], w[1])).collect()
    }

    /// The chain with `s` inserted, if it fits strictly between two levels.
    pub fn insert(&self, s: Mask) -> Option<Chain> {
        let g = full(self.n1);
        if s == 0 || s == g || self.sets.contains(&s) {
            return None;
        }
        let pos = self
            .sets
            .iter()
            .position(|&t| is_subset(s, t))
            .unwrap_or(self.sets.len());
        if self.sets[..pos].iter().any(|&t| !is_subset(t, s)) {
            return None;
        }
        let mut sets = self.sets.clone();
        sets.insert(pos, s);
        Some(Chain { sets, n1: self.n1 })
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|&s| subset::elems(s)).collect()
    }
}

/// Every chain of `k` nonempty proper subsets of `{0..n1-1}`, sorted.
pub fn all_chains(n1: usize, k: usize) -> Vec<Chain> {
    let g = full(n1);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(lo: Mask, g: Mask, k: usize, n1: usize, cur: &mut Vec<Mask>, out: &mut Vec<Chain>) {
        if cur.len() == k {
            out.push(Chain::new_unchecked(cur.clone(), n1));
            return;
        }
        // Need room for the remaining levels: each adds at least one element.
        let left = k - cur.len();
        for extra in subset::subsets(g & !lo) {
            let s = lo | extra;
            let room = subset::card(g & !s);
            if extra == 0 || room < left {
                continue;
            }
            cur.push(s);
            rec(s, g, k, n1, cur, out);
            cur.pop();
        }
    }
    rec(0, g, k, n1, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_counts() {
        // Chains of length 1 are nonempty proper subsets; maximal chains are permutations.
        assert_eq!(all_chains(3, 1).len(), 6);
        assert_eq!(all_chains(3, 2).len(), 6);
        assert_eq!(all_chains(4, 3).len(), 24);
        assert_eq!(all_chains(3, 0), vec![Chain::empty(3)]);
    }

    #[test]
    fn insert_respects_nesting() {
        let c = Chain::new(vec![0b001], 3).unwrap();
        assert_eq!(c.insert(0b011).unwrap().sets(), &[0b001, 0b011]);
        assert!(c.insert(0b110).is_none());
        assert_eq!(c.gaps(), vec![(0, 0b001), (0b001, 0b111)]);
    }
}
