use std::collections::BTreeMap;
use std::sync::Arc;

use super::laurent::Laurent;
use crate::error::{Error, Result};
use crate::genperm::{GenPerm, Sense};
use crate::matroid::subset::{self, Mask};
use crate::matroid::{Matroid, Perm};

/// How a K-class is assembled. Leaves refer to matroids by index into the
/// owning [`KClass`]'s matroid list, so per-fixed-point evaluation only
/// needs the lex-first bases of those matroids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KDesc {
    /// `[S_M]_σ = Σ_{i∈B_σ} T_i^{-1}`.
    S(usize),
    /// `[Q_M]_σ = Σ_{i∉B_σ} T_i^{-1}`.
    Q(usize),
    /// `[S^∨_{M_1,M_2}]_σ = Σ_{i ∈ B_σ(M_2) ∖ B_σ(M_1)} T_i` for a quotient `M_1` of `M_2`.
    SDualQuot(usize, usize),
    /// The structure sheaf, `1` at every fixed point.
    One,
    /// `Σ_i T_i^{-1}`, the trivial bundle `C^E` with inverse action.
    Trivial,
    /// `[O(D_P)]_σ = T^{-m_σ}` with `m_σ` the minimizing vertex.
    Line(Arc<GenPerm>),
    Dual(Box<KDesc>),
    Wedge(Box<KDesc>, usize),
    Det(Box<KDesc>),
    Sum(Vec<KDesc>),
    Prod(Vec<KDesc>),
    Scale(i64, Box<KDesc>),
    /// `(crem E)_σ = E_{σ̄}(T^{-1})`.
    Crem(Box<KDesc>),
    /// An explicit table of values, for tests and imported data.
    Explicit(Arc<BTreeMap<Perm, Laurent>>),
}

/// A K-class on the permutohedral variety `X_E`, evaluated lazily at each
/// fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    n1: usize,
    mats: Vec<Matroid>,
    desc: KDesc,
}

/// Fixed-point data a descriptor needs: the permutation and the lex-first
/// bases of the class's matroids at it.
pub struct FixedPoint<'a> {
    pub sigma: &'a Perm,
    pub bases: &'a [Mask],
}

impl KClass {
    fn leaf(n1: usize, mats: Vec<Matroid>, desc: KDesc) -> Self {
        KClass { n1, mats, desc }
    }

    pub fn s(m: &Matroid) -> Self {
        Self::leaf(m.n1(), vec![m.clone()], KDesc::S(0))
    }

    pub fn q(m: &Matroid) -> Self {
        Self::leaf(m.n1(), vec![m.clone()], KDesc::Q(0))
    }

    /// `S^∨_{M_1,M_2}`, the dual of `S_{M_2} / S_{M_1}`.
    pub fn s_dual_quotient(m1: &Matroid, m2: &Matroid) -> Result<Self> {
        if let Some(f) = m1.quotient_witness(m2) {
            return Err(Error::NotAQuotient {
                flat: subset::elems(f),
            });
        }
        Ok(Self::leaf(
            m1.n1(),
            vec![m1.clone(), m2.clone()],
            KDesc::SDualQuot(0, 1),
        ))
    }

    pub fn one(n1: usize) -> Self {
        Self::leaf(n1, vec![], KDesc::One)
    }

    pub fn trivial(n1: usize) -> Self {
        Self::leaf(n1, vec![], KDesc::Trivial)
    }

    pub fn line(p: &GenPerm) -> Self {
        Self::leaf(p.n1(), vec![], KDesc::Line(Arc::new(p.clone())))
    }

    pub fn explicit(n1: usize, table: BTreeMap<Perm, Laurent>) -> Self {
        Self::leaf(n1, vec![], KDesc::Explicit(Arc::new(table)))
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn matroids(&self) -> &[Matroid] {
        &self.mats
    }

    pub fn desc(&self) -> &KDesc {
        &self.desc
    }

    fn wrap(&self, f: impl FnOnce(Box<KDesc>) -> KDesc) -> Self {
        KClass {
            n1: self.n1,
            mats: self.mats.clone(),
            desc: f(Box::new(self.desc.clone())),
        }
    }

    pub fn dual(&self) -> Self {
        self.wrap(KDesc::Dual)
    }

    pub fn wedge(&self, k: usize) -> Self {
        self.wrap(|d| KDesc::Wedge(d, k))
    }

    pub fn det(&self) -> Self {
        self.wrap(KDesc::Det)
    }

    pub fn crem(&self) -> Self {
        self.wrap(KDesc::Crem)
    }

    pub fn scale(&self, c: i64) -> Self {
        self.wrap(|d| KDesc::Scale(c, d))
    }

    fn combine(parts: &[&KClass], f: fn(Vec<KDesc>) -> KDesc) -> Result<Self> {
        let n1 = parts[0].n1;
        let mut mats = Vec::new();
        let mut descs = Vec::new();
        for p in parts {
            if p.n1 != n1 {
                return Err(Error::InvalidArgument(format!(
                    "classes on ground sets of size {} and {}",
                    n1, p.n1
                )));
            }
            descs.push(p.desc.reindexed(mats.len()));
            mats.extend(p.mats.iter().cloned());
        }
        Ok(KClass {
            n1,
            mats,
            desc: f(descs),
        })
    }

    pub fn sum(parts: &[&KClass]) -> Result<Self> {
        Self::combine(parts, KDesc::Sum)
    }

    pub fn product(parts: &[&KClass]) -> Result<Self> {
        Self::combine(parts, KDesc::Prod)
    }

    /// Lex-first bases of this class's matroids at `sigma`.
    pub fn bases_at(&self, sigma: &Perm) -> Vec<Mask> {
        self.mats.iter().map(|m| m.lex_first_basis(sigma)).collect()
    }

    /// `[E]_σ`.
    pub fn at(&self, sigma: &Perm) -> Result<Laurent> {
        let bases = self.bases_at(sigma);
        self.at_with(&FixedPoint {
            sigma,
            bases: &bases,
        })
    }

    pub fn at_with(&self, fp: &FixedPoint<'_>) -> Result<Laurent> {
        self.desc.eval(self.n1, &self.mats, fp)
    }

    /// `Σ a_i`, read off at the identity permutation.
    pub fn rank(&self) -> Result<i64> {
        Ok(self.at(&Perm::identity(self.n1))?.rank())
    }
}

impl KDesc {
    /// Shifts every matroid index by `offset`.
    pub(crate) fn reindexed(&self, offset: usize) -> KDesc {
        let r = |d: &KDesc| Box::new(d.reindexed(offset));
        match self {
            KDesc::S(i) => KDesc::S(i + offset),
            KDesc::Q(i) => KDesc::Q(i + offset),
            KDesc::SDualQuot(i, j) => KDesc::SDualQuot(i + offset, j + offset),
            KDesc::Dual(d) => KDesc::Dual(r(d)),
            KDesc::Wedge(d, k) => KDesc::Wedge(r(d), *k),
            KDesc::Det(d) => KDesc::Det(r(d)),
            KDesc::Crem(d) => KDesc::Crem(r(d)),
            KDesc::Scale(c, d) => KDesc::Scale(*c, r(d)),
            KDesc::Sum(v) => KDesc::Sum(v.iter().map(|d| d.reindexed(offset)).collect()),
            KDesc::Prod(v) => KDesc::Prod(v.iter().map(|d| d.reindexed(offset)).collect()),
            other => other.clone(),
        }
    }

    pub(crate) fn eval(&self, n1: usize, mats: &[Matroid], fp: &FixedPoint<'_>) -> Result<Laurent> {
        let inv_sum = |mask: Mask| {
            let mut l = Laurent::zero();
            for i in subset::iter(mask) {
                l.add_term(unit(n1, i, -1), 1);
            }
            l
        };
        let full = subset::full(n1);
        Ok(match self {
            KDesc::S(i) => inv_sum(fp.bases[*i]),
            KDesc::Q(i) => inv_sum(full & !fp.bases[*i]),
            KDesc::SDualQuot(i, j) => inv_sum(fp.bases[*j] & !fp.bases[*i]).dual(),
            KDesc::One => Laurent::one(n1),
            KDesc::Trivial => inv_sum(full),
            KDesc::Line(p) => {
                let v = p.vertex(fp.sigma, Sense::Min);
                Laurent::monomial(v.iter().map(|&x| -(x as i32)).collect(), 1)
            }
            KDesc::Dual(d) => d.eval(n1, mats, fp)?.dual(),
            KDesc::Wedge(d, k) => d.eval(n1, mats, fp)?.wedge(*k)?,
            KDesc::Det(d) => {
                let v = d.eval(n1, mats, fp)?;
                let r = v.rank();
                if r < 0 {
                    return Err(Error::MixedSigns);
                }
                v.wedge(r as usize)?
            }
            KDesc::Sum(v) => {
                let mut acc = Laurent::zero();
                for d in v {
                    acc = acc.add(&d.eval(n1, mats, fp)?);
                }
                acc
            }
            KDesc::Prod(v) => {
                let mut acc = Laurent::one(n1);
                for d in v {
                    acc = acc.mul(&d.eval(n1, mats, fp)?);
                }
                acc
            }
            KDesc::Scale(c, d) => d.eval(n1, mats, fp)?.scale(*c),
            KDesc::Crem(d) => {
                let bar = fp.sigma.reversed();
                let bases: Vec<Mask> = mats.iter().map(|m| m.lex_first_basis(&bar)).collect();
                d.eval(
                    n1,
                    mats,
                    &FixedPoint {
                        sigma: &bar,
                        bases: &bases,
                    },
                )?
                .dual()
            }
            KDesc::Explicit(t) => t.get(fp.sigma).cloned().unwrap_or_default(),
        })
    }
}

fn unit(n1: usize, i: usize, p: i32) -> Vec<i32> {
    let mut m = vec![0; n1];
    m[i] = p;
    m
}
