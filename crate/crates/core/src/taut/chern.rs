//! Equivariant Chern classes at fixed points, computed from Chern roots.
//!
//! A monomial `T^m` in a localized K-class contributes the root `⟨m, t⟩`,
//! so `c^T(E, u)_σ = Π (1 + ⟨m, t⟩ u)^{a}`. In particular `S_M^∨` has roots
//! `t_b` for `b ∈ B_σ` and `Q_M` has roots `-t_c` for `c ∉ B_σ`, and the
//! dual of a class negates its roots.

use num_traits::{One, Zero};

use super::kclass::{FixedPoint, KClass, KDesc};
use crate::algebra::Rat;
use crate::error::Error;
use crate::matroid::subset::{self, Mask};
use crate::matroid::Matroid;

/// Exact scalars the per-fixed-point evaluators run over: checked `i128`
/// on the fast path, rationals on the reference path.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Rat::from_integer(v.into())
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Why a per-fixed-point evaluation stopped.
#[derive(Debug)]
pub enum EvalFail {
    /// An `i128` operation overflowed; the caller retries on the exact path.
    Overflow,
    Err(Error),
}

impl EvalFail {
    /// For rational evaluations, where overflow cannot happen.
    pub fn into_error(self) -> Error {
        match self {
            EvalFail::Err(e) => e,
            EvalFail::Overflow => Error::InvalidArgument("overflow in exact arithmetic".into()),
        }
    }
}

impl From<Error> for EvalFail {
    fn from(e: Error) -> Self {
        EvalFail::Err(e)
    }
}

pub type EvalResult<T> = std::result::Result<T, EvalFail>;

fn ck<T>(v: Option<T>) -> EvalResult<T> {
    v.ok_or(EvalFail::Overflow)
}

/// One multiplicative factor of a graded integrand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChernKind {
    /// `Σ_{i=0}^n α^i x^i` with the lift `α_σ = -t_{σ(n)}`.
    Alpha,
    /// `Σ_{j=0}^n β^j y^j` with the lift `β_σ = t_{σ(0)}`.
    Beta,
    /// The full Chern polynomial `c^T(E, u)`, truncated at degree `n`.
    Chern(KClass),
    /// The single graded piece `c_k^T(E) u^k`.
    FixedPower(KClass, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernFactor {
    pub kind: ChernKind,
    /// Name of the bookkeeping variable.
    pub var: String,
}

impl ChernFactor {
    pub fn alpha(var: &str) -> Self {
        ChernFactor {
            kind: ChernKind::Alpha,
            var: var.into(),
        }
    }

    pub fn beta(var: &str) -> Self {
        ChernFactor {
            kind: ChernKind::Beta,
            var: var.into(),
        }
    }

    pub fn chern(class: KClass, var: &str) -> Self {
        ChernFactor {
            kind: ChernKind::Chern(class),
            var: var.into(),
        }
    }

    pub fn fixed_power(class: KClass, k: usize, var: &str) -> Self {
        ChernFactor {
            kind: ChernKind::FixedPower(class, k),
            var: var.into(),
        }
    }

    pub fn class(&self) -> Option<&KClass> {
        match &self.kind {
            ChernKind::Chern(c) | ChernKind::FixedPower(c, _) => Some(c),
            _ => None,
        }
    }
}

/// Chern roots `(⟨m, t⟩, multiplicity)` of a class at a fixed point.
pub fn roots<R: Scalar>(
    desc: &KDesc,
    n1: usize,
    mats: &[Matroid],
    fp: &FixedPoint<'_>,
    t: &[R],
) -> EvalResult<Vec<(R, i64)>> {
    let from_mask = |mask: Mask, sign_plus: bool| -> EvalResult<Vec<(R, i64)>> {
        subset::iter(mask)
            .map(|i| {
                let r = if sign_plus {
                    t[i].clone()
                } else {
                    ck(t[i].neg())?
                };
                Ok((r, 1))
            })
            .collect()
    };
    let full = subset::full(n1);
    match desc {
        KDesc::S(i) => from_mask(fp.bases[*i], false),
        KDesc::Q(i) => from_mask(full & !fp.bases[*i], false),
        KDesc::SDualQuot(i, j) => from_mask(fp.bases[*j] & !fp.bases[*i], true),
        KDesc::Dual(inner) => match inner.as_ref() {
            KDesc::S(i) => from_mask(fp.bases[*i], true),
            KDesc::Q(i) => from_mask(full & !fp.bases[*i], true),
            _ => generic_roots(desc, n1, mats, fp, t),
        },
        _ => generic_roots(desc, n1, mats, fp, t),
    }
}

fn generic_roots<R: Scalar>(
    desc: &KDesc,
    n1: usize,
    mats: &[Matroid],
    fp: &FixedPoint<'_>,
    t: &[R],
) -> EvalResult<Vec<(R, i64)>> {
    let l = desc.eval(n1, mats, fp)?;
    let mut out = Vec::with_capacity(l.len());
    for (m, c) in l.terms() {
        let mut r = R::zero();
        for (x, &k) in t.iter().zip(m) {
            if k != 0 {
                r = ck(r.add(&ck(x.mul(&R::from_i64(k as i64)))?))?;
            }
        }
        out.push((r, c));
    }
    Ok(out)
}

/// Coefficients `c_0, ..., c_deg` of `Π (1 + r u)^{a}`; negative
/// multiplicities use the inverse series.
pub fn chern_from_roots<R: Scalar>(roots: &[(R, i64)], deg: usize) -> EvalResult<Vec<R>> {
    let mut c = vec![R::zero(); deg + 1];
    c[0] = R::one();
    for (r, a) in roots {
        if r.is_zero() {
            continue;
        }
        for _ in 0..a.unsigned_abs() {
            if *a > 0 {
                for j in (1..=deg).rev() {
                    c[j] = ck(c[j].add(&ck(c[j - 1].mul(r))?))?;
                }
            } else {
                // Divide by (1 + r u): c_j -= r c_{j-1}, in increasing order.
                let nr = ck(r.neg())?;
                for j in 1..=deg {
                    c[j] = ck(c[j].add(&ck(c[j - 1].mul(&nr))?))?;
                }
            }
        }
    }
    Ok(c)
}

/// `[1, v, v^2, ..., v^deg]`.
pub fn powers<R: Scalar>(v: &R, deg: usize) -> EvalResult<Vec<R>> {
    let mut out = Vec::with_capacity(deg + 1);
    out.push(R::one());
    for j in 1..=deg {
        out.push(ck(out[j - 1].mul(v))?);
    }
    Ok(out)
}

/// The univariate coefficient list (in the factor's own variable) of one
/// factor at one fixed point, truncated at degree `deg`.
pub fn factor_coeffs<R: Scalar>(
    kind: &ChernKind,
    desc: Option<&KDesc>,
    n1: usize,
    mats: &[Matroid],
    fp: &FixedPoint<'_>,
    t: &[R],
    deg: usize,
) -> EvalResult<Vec<R>> {
    match kind {
        ChernKind::Alpha => powers(&ck(t[fp.sigma.at(n1 - 1)].neg())?, deg),
        ChernKind::Beta => powers(&t[fp.sigma.at(0)], deg),
        ChernKind::Chern(_) => {
            let r = roots(desc.expect("class descriptor"), n1, mats, fp, t)?;
            chern_from_roots(&r, deg)
        }
        ChernKind::FixedPower(_, k) => {
            let mut out = vec![R::zero(); deg + 1];
            if *k <= deg {
                let r = roots(desc.expect("class descriptor"), n1, mats, fp, t)?;
                out[*k] = chern_from_roots(&r, *k)?.pop().expect("nonempty");
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Perm;

    fn eval(
        kind: &ChernKind,
        class: Option<&KClass>,
        sigma: &Perm,
        t: &[i128],
        deg: usize,
    ) -> Vec<i128> {
        let (n1, mats, desc, bases) = match class {
            Some(c) => (
                c.n1(),
                c.matroids().to_vec(),
                Some(c.desc()),
                c.bases_at(sigma),
            ),
            None => (t.len(), vec![], None, vec![]),
        };
        let fp = FixedPoint {
            sigma,
            bases: &bases,
        };
        factor_coeffs(kind, desc, n1, &mats, &fp, t, deg).unwrap()
    }

    #[test]
    fn u12_at_identity() {
        let m = Matroid::uniform(1, 2).unwrap();
        let id = Perm::identity(2);
        let t = [2i128, 3];
        let sd = KClass::s(&m).dual();
        assert_eq!(
            eval(&ChernKind::Chern(sd.clone()), Some(&sd), &id, &t, 1),
            vec![1, 2]
        );
        let q = KClass::q(&m);
        assert_eq!(
            eval(&ChernKind::Chern(q.clone()), Some(&q), &id, &t, 1),
            vec![1, -3]
        );
        assert_eq!(eval(&ChernKind::Alpha, None, &id, &t, 1), vec![1, -3]);
    }

    #[test]
    fn inverse_series() {
        let c = chern_from_roots(&[(2i128, -1)], 3).unwrap();
        assert_eq!(c, vec![1, -2, 4, -8]);
        let back = chern_from_roots(&[(2i128, -1), (2, 1)], 3).unwrap();
        assert_eq!(back, vec![1, 0, 0, 0]);
    }
}
