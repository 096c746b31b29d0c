//! K-theoretic Euler characteristics by localization:
//! `χ^T(E) = Σ_σ E_σ / Π_{i<n} (1 - T_{σ(i+1)} / T_{σ(i)})`.
//!
//! Substituting `T_i = q^{w_i}` for distinct weights `w` turns `χ^T` into a
//! Laurent polynomial `F(q)` with exponents in `[-D, D]`. For each integer
//! `q ≥ 2` the sum is cleared to integers with `V(q) = Π_{a<b} (q^{w_a} - q^{w_b})`,
//! giving exact values of the polynomial `G(q) = q^D F(q)`. Forward
//! differences over consecutive nodes then give `G(1) = χ(E)`; the
//! differences above degree `2D` must vanish.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Engine, Stats};
use crate::algebra::Int;
use crate::error::{Error, Result};
use crate::matroid::Perm;
use crate::taut::KClass;

/// Extra nodes beyond the degree bound whose differences must vanish.
const VERIFY: usize = 3;

struct Exps {
    max_abs: i64,
    neg: i64,
}

impl Engine {
    pub fn euler_char_ab(&self, class: &KClass) -> Result<Int> {
        Ok(self.euler_chars_ab(std::slice::from_ref(class))?.remove(0))
    }

    /// `χ` of several classes on the same `X_E`, sharing one pass over the
    /// permutations per attempt.
    pub fn euler_chars_ab(&self, classes: &[KClass]) -> Result<Vec<Int>> {
        let Some(first) = classes.first() else {
            return Ok(vec![]);
        };
        let n1 = first.n1();
        if classes.iter().any(|c| c.n1() != n1) {
            return Err(Error::InvalidArgument(
                "classes live on different ground sets".into(),
            ));
        }
        self.check_ground(n1)?;
        let w = self.weight_direction("kchi", n1, 0);
        let exps = self.exponent_range(classes, &w)?;
        let k = exps.neg;
        let mut d = exps.max_abs.max(k);
        for attempt in 0..2 {
            match self.chi_with_bound(classes, &w, d, k)? {
                Some(vals) => {
                    Stats::bump(&self.stats.kchi_runs, 1);
                    Stats::bump(
                        &self.stats.kchi_verifications,
                        (VERIFY * classes.len()) as u64,
                    );
                    return Ok(vals);
                }
                None if attempt == 0 => {
                    Stats::bump(&self.stats.escalations, 1);
                    d = (2 * d).max(1);
                }
                None => {}
            }
        }
        Err(Error::InterpolationInconsistent(d as usize))
    }

    fn exponent_range(&self, classes: &[KClass], w: &[i64]) -> Result<Exps> {
        let n1 = w.len();
        let parts: Vec<Result<Exps>> = self.map_blocks(n1, |lo, hi| {
            let mut sigma = Perm::unrank(n1, lo);
            let mut e = Exps { max_abs: 0, neg: 0 };
            for i in lo..hi {
                for c in classes {
                    for (m, _) in c.at(&sigma)?.terms() {
                        let x: i64 = m.iter().zip(w).map(|(&a, &b)| a as i64 * b).sum();
                        e.max_abs = e.max_abs.max(x.abs());
                        e.neg = e.neg.max(-x);
                    }
                }
                if i + 1 < hi {
                    sigma.advance();
                }
            }
            Ok(e)
        });
        let mut out = Exps { max_abs: 0, neg: 0 };
        for p in parts {
            let p = p?;
            out.max_abs = out.max_abs.max(p.max_abs);
            out.neg = out.neg.max(p.neg);
        }
        Ok(out)
    }

    /// Runs the sum with exponent bound `d`; `None` when the verification
    /// differences do not vanish.
    fn chi_with_bound(
        &self,
        classes: &[KClass],
        w: &[i64],
        d: i64,
        k: i64,
    ) -> Result<Option<Vec<Int>>> {
        let n1 = w.len();
        let n = n1 - 1;
        let nodes = (2 * d) as usize + 1 + VERIFY;
        let qs: Vec<Int> = (0..nodes).map(|j| Int::from(2 + j as i64)).collect();
        let wmax = w.iter().copied().max().unwrap_or(0);
        // Largest exponent met: ⟨m, w⟩ + K + Σ_{i<n} w_{σ(i)}.
        let top = (d + k + wmax * n as i64) as usize;
        let pows: Vec<Vec<Int>> = qs
            .iter()
            .map(|q| {
                let mut v = Vec::with_capacity(top + 1);
                v.push(Int::one());
                for i in 1..=top {
                    let next = &v[i - 1] * q;
                    v.push(next);
                }
                v
            })
            .collect();
        let big_q: Vec<Vec<Int>> = pows
            .iter()
            .map(|p| w.iter().map(|&wi| p[wi as usize].clone()).collect())
            .collect();
        let vq: Vec<Int> = big_q
            .iter()
            .map(|bq| {
                let mut v = Int::one();
                for a in 0..n1 {
                    for b in (a + 1)..n1 {
                        v *= &bq[a] - &bq[b];
                    }
                }
                v
            })
            .collect();

        let parts: Vec<Result<Vec<Vec<Int>>>> = self.map_blocks(n1, |lo, hi| {
            let mut acc = vec![vec![Int::zero(); nodes]; classes.len()];
            let mut sigma = Perm::unrank(n1, lo);
            let mut terms: Vec<Vec<(usize, i64)>> = vec![vec![]; classes.len()];
            for i in lo..hi {
                let s: i64 = (0..n).map(|i| w[sigma.at(i)]).sum();
                for (c, slot) in classes.iter().zip(terms.iter_mut()) {
                    slot.clear();
                    for (m, a) in c.at(&sigma)?.terms() {
                        let x: i64 = m.iter().zip(w).map(|(&e, &wi)| e as i64 * wi).sum();
                        slot.push(((x + k + s) as usize, a));
                    }
                }
                for j in 0..nodes {
                    let mut den = Int::one();
                    for i in 0..n {
                        den *= &big_q[j][sigma.at(i)] - &big_q[j][sigma.at(i + 1)];
                    }
                    let (wsig, r) = vq[j].div_rem(&den);
                    debug_assert!(r.is_zero());
                    for (ci, slot) in terms.iter().enumerate() {
                        if slot.is_empty() {
                            continue;
                        }
                        let mut val = Int::zero();
                        for &(e, a) in slot {
                            val += &pows[j][e] * a;
                        }
                        acc[ci][j] += &wsig * val;
                    }
                }
                if i + 1 < hi {
                    sigma.advance();
                }
            }
            Ok(acc)
        });
        let mut total = vec![vec![Int::zero(); nodes]; classes.len()];
        for p in parts {
            for (t, b) in total.iter_mut().zip(p?) {
                for (x, y) in t.iter_mut().zip(b) {
                    *x += y;
                }
            }
        }
        let mut out = Vec::with_capacity(classes.len());
        for numer in total {
            // G(q) = N(q) q^{D-K} / V(q).
            let mut g = Vec::with_capacity(nodes);
            for j in 0..nodes {
                let scaled = &numer[j] * &pows[j][(d - k) as usize];
                let (quot, r) = scaled.div_rem(&vq[j]);
                if !r.is_zero() {
                    return Err(Error::NonIntegral(format!("{scaled}/{}", vq[j])));
                }
                g.push(quot);
            }
            match value_at_one(g, (2 * d) as usize) {
                Some(v) => out.push(v),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }
}

/// Values `g[j] = G(2 + j)` of a polynomial of degree `≤ deg`; returns
/// `G(1) = Σ_k (-1)^k Δ^k G(2)` after checking that the differences of
/// order above `deg` vanish.
pub(crate) fn value_at_one(mut g: Vec<Int>, deg: usize) -> Option<Int> {
    let len = g.len();
    let mut leading = Vec::with_capacity(len);
    for order in 0..len {
        leading.push(g[0].clone());
        for j in 0..len - order - 1 {
            g[j] = &g[j + 1] - &g[j];
        }
    }
    if leading[deg + 1..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut v = Int::zero();
    for (k, x) in leading.iter().enumerate().take(deg + 1) {
        if k % 2 == 0 {
            v += x;
        } else {
            v -= x;
        }
    }
    Some(v)
}
