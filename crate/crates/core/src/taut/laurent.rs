use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::Rat;
use crate::error::{Error, Result};

/// A Laurent polynomial `Σ a_m T^m` in `T_0, ..., T_n` with integer
/// coefficients: the value of a K-class at one fixed point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent(BTreeMap<Vec<i32>, i64>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent(BTreeMap::new())
    }

    pub fn one(n1: usize) -> Self {
        Self::monomial(vec![0; n1], 1)
    }

    pub fn monomial(m: Vec<i32>, c: i64) -> Self {
        let mut l = Self::zero();
        l.add_term(m, c);
        l
    }

    /// `T_i^{power}`.
    pub fn var_power(n1: usize, i: usize, power: i32) -> Self {
        let mut m = vec![0; n1];
        m[i] = power;
        Self::monomial(m, 1)
    }

    pub fn add_term(&mut self, m: Vec<i32>, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.0.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.retain(|_, v| *v != 0);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, i64)> {
        self.0.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Laurent {
        let mut out = Laurent::zero();
        for (m, v) in self.terms() {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let m = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    /// `T^m ↦ T^{-m}`.
    pub fn dual(&self) -> Laurent {
        Laurent(
            self.0
                .iter()
                .map(|(m, &c)| (m.iter().map(|x| -x).collect(), c))
                .collect(),
        )
    }

    /// The rank: the value at `T = 1`.
    pub fn rank(&self) -> i64 {
        self.0.values().sum()
    }

    /// `Elem_k` of the monomials counted with multiplicity: the `k`-th
    /// exterior power when every multiplicity is positive.
    pub fn wedge(&self, k: usize) -> Result<Laurent> {
        if self.0.values().any(|&c| c < 0) {
            return Err(Error::MixedSigns);
        }
        let n1 = self.0.keys().next().map_or(0, Vec::len);
        // gen[j] = coefficient of u^j in Π (1 + T^m u)^{a}.
        let mut gen = vec![Laurent::zero(); k + 1];
        gen[0] = Laurent::one(n1);
        for (m, c) in self.terms() {
            for _ in 0..c {
                for j in (1..=k).rev() {
                    let shifted = gen[j - 1].mul(&Laurent::monomial(m.clone(), 1));
                    gen[j] = gen[j].add(&shifted);
                }
            }
        }
        Ok(std::mem::take(&mut gen[k]))
    }

    /// Substitutes `T_b = T_a`.
    pub fn merge(&self, a: usize, b: usize) -> Laurent {
        let mut out = Laurent::zero();
        for (m, c) in self.terms() {
            let mut m2 = m.clone();
            m2[a] += m2[b];
            m2[b] = 0;
            out.add_term(m2, c);
        }
        out
    }

    /// `ζ`: evaluates `Σ a Π (1 + t_i)^{m_i}` at a rational point.
    pub fn zeta_eval(&self, t: &[Rat]) -> Rat {
        let shifted: Vec<Rat> = t.iter().map(|x| x + Rat::one()).collect();
        let mut acc = Rat::zero();
        for (m, c) in self.terms() {
            let mut v = Rat::from_integer(c.into());
            for (x, &k) in shifted.iter().zip(m) {
                v *= pow_rat(x, k);
            }
            acc += v;
        }
        acc
    }
}

pub(crate) fn pow_rat(x: &Rat, k: i32) -> Rat {
    let mut out = Rat::one();
    for _ in 0..k.unsigned_abs() {
        out *= x;
    }
    if k < 0 {
        out.recip()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_of_two_variables() {
        let e = Laurent::var_power(4, 0, 1).add(&Laurent::var_power(4, 1, 1));
        assert_eq!(e.wedge(2).unwrap(), Laurent::monomial(vec![1, 1, 0, 0], 1));
        assert_eq!(e.wedge(0).unwrap(), Laurent::one(4));
        assert_eq!(e.wedge(3).unwrap(), Laurent::zero());
        assert_eq!(e.scale(-1).wedge(1), Err(Error::MixedSigns));
    }

    #[test]
    fn zeta_of_inverse() {
        let l = Laurent::var_power(2, 0, -1);
        let t = [Rat::new(1.into(), 2.into()), Rat::zero()];
        assert_eq!(l.zeta_eval(&t), Rat::new(2.into(), 3.into()));
    }
}
