#![allow(dead_code)]

use proptest::prelude::*;
use tautmat::engine::Engine;
use tautmat::matroid::subset::{self, Mask};
use tautmat::matroid::Matroid;

pub fn engine() -> Engine {
    Engine::new(7, 1)
}

/// Rank over GF(2) of the columns selected by `s`.
fn gf2_rank(cols: &[u8], s: Mask) -> usize {
    let mut basis: Vec<u8> = vec![];
    for i in subset::iter(s) {
        let mut v = cols[i];
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// The binary matroid of the given columns (vectors in GF(2)^4).
pub fn binary_matroid(cols: &[u8]) -> Matroid {
    let n1 = cols.len();
    let full = subset::full(n1);
    let r = gf2_rank(cols, full);
    let bases = (0..=full).filter(|&s| subset::card(s) == r && gf2_rank(cols, s) == r);
    Matroid::from_bases(n1, bases).expect("binary matroids satisfy the exchange axiom")
}

/// Binary matroids on `lo..=hi` elements, loops and parallel classes included.
pub fn arb_matroid(lo: usize, hi: usize) -> impl Strategy<Value = Matroid> {
    prop::collection::vec(0u8..16, lo..=hi).prop_map(|c| binary_matroid(&c))
}

/// Binary matroids without loops.
pub fn arb_loopless(lo: usize, hi: usize) -> impl Strategy<Value = Matroid> {
    prop::collection::vec(1u8..16, lo..=hi).prop_map(|c| binary_matroid(&c))
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
