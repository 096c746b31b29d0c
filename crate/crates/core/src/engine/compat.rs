//! The GKM condition: values at fixed points joined by a torus-invariant
//! curve agree modulo that curve's character. For `σ' = σ ∘ (i, i+1)` the
//! K-theory condition is `f_σ ≡ f_σ' mod (1 - T_{σ(i+1)} / T_{σ(i)})`,
//! which for Laurent polynomials means equality after `T_{σ(i+1)} = T_{σ(i)}`.

use rand::seq::SliceRandom;
use rand::Rng;

use super::Engine;
use crate::algebra::Rat;
use crate::error::Result;
use crate::matroid::Perm;
use crate::taut::{chern_from_roots, roots, EvalFail, FixedPoint, KClass, Laurent};

/// Exhaustive checking up to this ground-set size; sampling beyond.
const EXHAUSTIVE: usize = 6;
const SAMPLES: usize = 2000;

/// An adjacent pair of fixed points at which the condition fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatWitness {
    pub sigma: Perm,
    pub position: usize,
}

impl Engine {
    fn adjacent_pairs(&self, n1: usize) -> Vec<(Perm, usize)> {
        let all = |s: Perm| (0..n1.saturating_sub(1)).map(move |i| (s.clone(), i));
        if n1 <= EXHAUSTIVE {
            Perm::all(n1).flat_map(all).collect()
        } else {
            let mut rng = self.rng("compat", 0);
            let total = crate::matroid::factorial(n1);
            (0..SAMPLES)
                .map(|_| {
                    let s = Perm::unrank(n1, rng.gen_range(0..total));
                    let i = rng.gen_range(0..n1 - 1);
                    (s, i)
                })
                .collect()
        }
    }

    /// Checks a K-class given by its fixed-point values.
    pub fn compat_check_k(
        &self,
        n1: usize,
        at: &dyn Fn(&Perm) -> Result<Laurent>,
    ) -> Result<Option<CompatWitness>> {
        for (sigma, i) in self.adjacent_pairs(n1) {
            let other = sigma.swap_adjacent(i);
            let (a, b) = (sigma.at(i), sigma.at(i + 1));
            if at(&sigma)?.merge(a, b) != at(&other)?.merge(a, b) {
                return Ok(Some(CompatWitness { sigma, position: i }));
            }
        }
        Ok(None)
    }

    pub fn compat_check_class(&self, class: &KClass) -> Result<Option<CompatWitness>> {
        self.compat_check_k(class.n1(), &|s| class.at(s))
    }

    /// The Chow-side condition for `c^T(E, u)`: the two fixed-point values
    /// agree on the hyperplane `t_{σ(i)} = t_{σ(i+1)}`. Both sides are
    /// polynomials, so agreement is tested at random integer points of
    /// that hyperplane.
    pub fn compat_check_chern(&self, class: &KClass) -> Result<Option<CompatWitness>> {
        let n1 = class.n1();
        let mut rng = self.rng("compat-chern", 0);
        let mats = class.matroids();
        for (sigma, i) in self.adjacent_pairs(n1) {
            let other = sigma.swap_adjacent(i);
            for _ in 0..2 {
                let mut t: Vec<Rat> = (0..n1)
                    .map(|_| Rat::from_integer(rng.gen_range(-50i64..=50).into()))
                    .collect();
                t[sigma.at(i + 1)] = t[sigma.at(i)].clone();
                let eval = |s: &Perm| -> Result<Vec<Rat>> {
                    let bases = class.bases_at(s);
                    let fp = FixedPoint {
                        sigma: s,
                        bases: &bases,
                    };
                    let r = roots(class.desc(), n1, mats, &fp, &t).map_err(EvalFail::into_error)?;
                    chern_from_roots(&r, n1).map_err(EvalFail::into_error)
                };
                if eval(&sigma)? != eval(&other)? {
                    return Ok(Some(CompatWitness { sigma, position: i }));
                }
            }
        }
        Ok(None)
    }

    /// A uniformly random permutation, for spot checks.
    pub fn random_perm(&self, label: &str, attempt: u64, n1: usize) -> Perm {
        let mut v: Vec<usize> = (0..n1).collect();
        v.shuffle(&mut self.rng(label, attempt));
        Perm::new(v).expect("shuffle is a permutation")
    }
}
