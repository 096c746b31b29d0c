use std::fmt;

use crate::error::{Error, Result};

/// A permutation `σ` of `{0, ..., n}` stored by its images `σ(0), ..., σ(n)`.
///
/// Torus-fixed points of the permutohedral variety are indexed by these.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n1: usize) -> Self {
        Perm((0..n1 as u8).collect())
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n1 = images.len();
        let mut seen = vec![false; n1];
        for &i in &images {
            if i >= n1 || seen[i] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm(images.into_iter().map(|i| i as u8).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `σ(i)`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    /// `σ̄` with `σ̄(i) = σ(n - i)`.
    pub fn reversed(&self) -> Perm {
        let mut v = self.0.clone();
        v.reverse();
        Perm(v)
    }

    /// `σ ∘ (i, i+1)`: the fixed point joined to `σ` by a torus-invariant curve.
    pub fn swap_adjacent(&self, i: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(i, i + 1);
        Perm(v)
    }

    /// Position of each element: `inverse()[σ(i)] = i`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.0.len()];
        for (i, &s) in self.0.iter().enumerate() {
            inv[s as usize] = i;
        }
        inv
    }

    /// The images written as a word, e.g. `"2013"`; elements above 9 are
    /// separated by commas.
    pub fn word(&self) -> String {
        if self.0.len() <= 10 {
            self.0.iter().map(|&i| char::from(b'0' + i)).collect()
        } else {
            let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
            parts.join(",")
        }
    }

    /// The `idx`-th permutation of `{0..n1-1}` in lexicographic order.
    pub fn unrank(n1: usize, mut idx: u64) -> Perm {
        let mut pool: Vec<u8> = (0..n1 as u8).collect();
        let mut out = Vec::with_capacity(n1);
        for k in (0..n1).rev() {
            let f = factorial(k);
            let j = (idx / f) as usize;
            idx %= f;
            out.push(pool.remove(j));
        }
        Perm(out)
    }

    /// Advances to the lexicographic successor in place. Returns the first
    /// position whose image changed, or `None` after the last permutation.
    pub fn advance(&mut self) -> Option<usize> {
        let v = &mut self.0;
        let n = v.len();
        if n < 2 {
            return None;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let pivot = i - 1;
        let mut j = n - 1;
        while v[j] <= v[pivot] {
            j -= 1;
        }
        v.swap(pivot, j);
        v[i..].reverse();
        Some(pivot)
    }

    /// All permutations of `{0..n1-1}` in lexicographic order.
    pub fn all(n1: usize) -> impl Iterator<Item = Perm> {
        let mut cur = Some(Perm::identity(n1));
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            let mut next = out.clone();
            cur = next.advance().map(|_| next);
            Some(out)
        })
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ[{}]", self.word())
    }
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unrank_matches_iteration_order() {
        for (idx, p) in Perm::all(4).enumerate() {
            assert_eq!(Perm::unrank(4, idx as u64), p);
        }
        assert_eq!(Perm::all(4).count(), 24);
    }

    #[test]
    fn advance_reports_first_changed_position() {
        let mut p = Perm::new(vec![0, 2, 1]).unwrap();
        let before = p.clone();
        let pivot = p.advance().unwrap();
        assert_eq!(p, Perm::new(vec![1, 0, 2]).unwrap());
        assert!((0..pivot).all(|i| before.at(i) == p.at(i)));
        assert_ne!(before.at(pivot), p.at(pivot));
    }

    #[test]
    fn single_point() {
        assert_eq!(Perm::all(1).count(), 1);
        assert_eq!(Perm::all(0).count(), 1);
    }
}
