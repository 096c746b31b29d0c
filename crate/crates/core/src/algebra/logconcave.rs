//! Log-concave unbroken arrays: along every line `x_i^k x_j^{d-d'-k} x^m`
//! the coefficients are nonnegative, log-concave and free of internal zeros.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

use super::{Rat, SparsePoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Negative,
    NotLogConcave,
    InternalZero,
}

/// The first line on which the array property fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vars: (String, String),
    /// Exponents of the fixed complementary monomial.
    pub rest: Vec<u32>,
    pub sequence: Vec<Rat>,
    pub index: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq: Vec<String> = self.sequence.iter().map(super::rat_to_string).collect();
        write!(
            f,
            "{:?} at position {} along ({}, {}) with rest {:?}: [{}]",
            self.kind,
            self.index,
            self.vars.0,
            self.vars.1,
            self.rest,
            seq.join(", ")
        )
    }
}

/// Checks a single coefficient sequence; returns the failing kind and index.
pub fn check_sequence(a: &[Rat]) -> Option<(ViolationKind, usize)> {
    if let Some(k) = a.iter().position(|c| c.is_negative()) {
        return Some((ViolationKind::Negative, k));
    }
    let first = a.iter().position(|c| !c.is_zero());
    let last = a.iter().rposition(|c| !c.is_zero());
    if let (Some(f), Some(l)) = (first, last) {
        if let Some(k) = (f..=l).find(|&k| a[k].is_zero()) {
            return Some((ViolationKind::InternalZero, k));
        }
    }
    for k in 1..a.len().saturating_sub(1) {
        if &a[k] * &a[k] < &a[k - 1] * &a[k + 1] {
            return Some((ViolationKind::NotLogConcave, k));
        }
    }
    None
}

/// Runs the unbroken-array test on a homogeneous polynomial of degree `d`.
pub fn logconcave_unbroken_check(f: &SparsePoly, d: u32) -> Result<Option<Violation>> {
    if !f.is_homogeneous(d) {
        return Err(Error::NotHomogeneous(d as usize));
    }
    let nv = f.nvars();
    let mut lines: BTreeSet<(usize, usize, Vec<u32>)> = BTreeSet::new();
    for (e, _) in f.terms() {
        for i in 0..nv {
            for j in (i + 1)..nv {
                let mut rest = e.0.clone();
                rest[i] = 0;
                rest[j] = 0;
                lines.insert((i, j, rest));
            }
        }
    }
    for (i, j, rest) in lines {
        let free = d - rest.iter().sum::<u32>();
        let seq: Vec<Rat> = (0..=free)
            .map(|k| {
                let mut e = rest.clone();
                e[i] = k;
                e[j] = free - k;
                f.coefficient_of(&e)
            })
            .collect();
        if let Some((kind, index)) = check_sequence(&seq) {
            return Ok(Some(Violation {
                kind,
                vars: (f.vars()[i].clone(), f.vars()[j].clone()),
                rest,
                sequence: seq,
                index,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn seq(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn sequences() {
        assert_eq!(check_sequence(&seq(&[1, 2, 1])), None);
        assert_eq!(
            check_sequence(&seq(&[1, 1, 2])),
            Some((ViolationKind::NotLogConcave, 1))
        );
        assert_eq!(
            check_sequence(&seq(&[1, 0, 1])),
            Some((ViolationKind::InternalZero, 1))
        );
        assert_eq!(
            check_sequence(&seq(&[0, 1, 0, 0, 1])),
            Some((ViolationKind::InternalZero, 2))
        );
        assert_eq!(
            check_sequence(&seq(&[2, -1])),
            Some((ViolationKind::Negative, 1))
        );
    }

    #[test]
    fn polynomial_lines() {
        let v = ["x", "y"];
        let p = SparsePoly::from_terms(
            &v,
            [
                (vec![2, 0], int(1)),
                (vec![1, 1], int(2)),
                (vec![0, 2], int(1)),
            ],
        );
        assert_eq!(logconcave_unbroken_check(&p, 2).unwrap(), None);
        let bad = SparsePoly::from_terms(&v, [(vec![2, 0], int(1)), (vec![0, 2], int(1))]);
        assert!(logconcave_unbroken_check(&bad, 2).unwrap().is_some());
        assert_eq!(
            logconcave_unbroken_check(&p, 3),
            Err(Error::NotHomogeneous(3))
        );
    }
}
