//! Exact arithmetic: rationals, sparse polynomials, interpolation, and the
//! small linear-algebra and coefficient-array checks built on them.

pub mod interp;
pub mod linalg;
pub mod logconcave;
pub mod poly;
pub mod psi;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use poly::{Mono, SparsePoly};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// `Some(n)` when `r` is an integer that fits in an `i64`.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(r.to_integer()).ok()
    } else {
        None
    }
}

/// `(-1)^k`.
pub fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Binomial coefficient as an exact integer; zero outside `0 ≤ k ≤ n`.
pub fn binom(n: i64, k: i64) -> Int {
    if k < 0 || n < 0 || k > n {
        return Int::zero();
    }
    let mut out = Int::one();
    for i in 0..k {
        out = out * Int::from(n - i) / Int::from(i + 1);
    }
    out
}

/// Decimal rendering of a rational (`"3"`, `"-1/2"`).
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n.trim().parse().ok()?, d))
        }
        None => Some(Rat::from_integer(s.parse().ok()?)),
    }
}
