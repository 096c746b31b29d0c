//! Integration of inhomogeneous classes whose localizations are rational
//! functions of `t` with poles only along `Π (1 + t_i) = 0`.
//!
//! Along the line `t = q·w` the pushforward `G(q) = Σ_σ ev(σ, q w) / D_σ(q w)`
//! times `Π (1 + q w_i)^m` is a polynomial `H(q)` of known degree bound; it
//! is interpolated from exact samples at `q = 1, 2, ...` and the
//! non-equivariant value is `H(0)`.

use num_traits::{One, Zero};

use super::{Engine, Stats};
use crate::algebra::interp::interpolate_univariate;
use crate::algebra::{Int, Rat};
use crate::error::{Error, Result};
use crate::matroid::Perm;
use crate::taut::KClass;

const VERIFY: usize = 3;

impl Engine {
    /// `∫_{X_E} ev` where `ev(σ, t)` is the localized (inhomogeneous) class.
    /// `m` is the pole multiplicity to clear and `d` the degree bound of
    /// the cleared pushforward along a line.
    pub fn integrate_inhomogeneous(
        &self,
        n1: usize,
        ev: &(dyn Fn(&Perm, &[Rat]) -> Result<Rat> + Sync),
        m: u32,
        d: usize,
    ) -> Result<Rat> {
        self.check_ground(n1)?;
        let w = self.weight_direction("inhom", n1, 1);
        let mut bound = d;
        for attempt in 0..2 {
            let samples = self.inhom_samples(n1, ev, m, &w, bound + 1 + VERIFY)?;
            match interpolate_univariate(&samples, bound, "q") {
                Ok(h) => {
                    Stats::bump(&self.stats.inhom_runs, 1);
                    Stats::bump(&self.stats.inhom_verifications, VERIFY as u64);
                    return Ok(h.coefficient_of(&[0]));
                }
                Err(Error::InconsistentSamples(_)) if attempt == 0 => {
                    Stats::bump(&self.stats.escalations, 1);
                    bound = (2 * bound).max(1);
                }
                Err(Error::InconsistentSamples(_)) => {}
                Err(e) => return Err(e),
            }
        }
        Err(Error::InterpolationInconsistent(bound))
    }

    fn inhom_samples(
        &self,
        n1: usize,
        ev: &(dyn Fn(&Perm, &[Rat]) -> Result<Rat> + Sync),
        m: u32,
        w: &[i64],
        count: usize,
    ) -> Result<Vec<(Rat, Rat)>> {
        let mut out = Vec::with_capacity(count);
        let mut q = 0i64;
        while out.len() < count {
            q += 1;
            let t: Vec<Rat> = w
                .iter()
                .map(|&wi| Rat::from_integer(Int::from(q * wi)))
                .collect();
            if t.iter().any(|x| (x + Rat::one()).is_zero()) {
                continue;
            }
            let blocks: Vec<Result<Rat>> = self.map_blocks(n1, |lo, hi| {
                let mut sigma = Perm::unrank(n1, lo);
                let mut acc = Rat::zero();
                for k in lo..hi {
                    let mut den = Rat::one();
                    for i in 0..n1 - 1 {
                        den *= &t[sigma.at(i)] - &t[sigma.at(i + 1)];
                    }
                    acc += ev(&sigma, &t)? / den;
                    if k + 1 < hi {
                        sigma.advance();
                    }
                }
                Ok(acc)
            });
            let mut g = Rat::zero();
            for b in blocks {
                g += b?;
            }
            let mut clear = Rat::one();
            for x in &t {
                let f = x + Rat::one();
                for _ in 0..m {
                    clear *= &f;
                }
            }
            out.push((Rat::from_integer(Int::from(q)), g * clear));
        }
        Ok(out)
    }

    /// `χ(E) = ∫ (1 + α + ... + α^n) ζ(E)` with `ζ(T_i) = 1 + t_i`.
    pub fn chi_zeta(&self, class: &KClass) -> Result<Int> {
        let n1 = class.n1();
        self.check_ground(n1)?;
        let mut m = 0u32;
        let mut pos = 0usize;
        for sigma in Perm::all(n1) {
            for (mono, _) in class.at(&sigma)?.terms() {
                let neg: i32 = mono.iter().map(|&x| (-x).max(0)).sum();
                let p: i32 = mono.iter().map(|&x| x.max(0)).sum();
                m = m.max(neg as u32);
                pos = pos.max(p as usize);
            }
        }
        let d = m as usize * n1 + pos;
        let ev = |sigma: &Perm, t: &[Rat]| -> Result<Rat> {
            let a = -&t[sigma.at(n1 - 1)];
            let mut weight = Rat::zero();
            let mut p = Rat::one();
            for _ in 0..n1 {
                weight += &p;
                p *= &a;
            }
            Ok(weight * class.at(sigma)?.zeta_eval(t))
        };
        let v = self.integrate_inhomogeneous(n1, &ev, m, d)?;
        if !v.is_integer() {
            return Err(Error::NonIntegral(crate::algebra::rat_to_string(&v)));
        }
        Ok(v.to_integer())
    }
}
