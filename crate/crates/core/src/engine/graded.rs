//! Top-degree extraction: `∫ ξ = Σ_σ ξ_σ / Π_{i<n} (t_{σ(i)} - t_{σ(i+1)})`.
//!
//! The integrand is a product of factors, each a univariate series in its
//! own bookkeeping variable whose degree matches its cohomological degree.
//! The sum is taken at an integer point `t` with distinct coordinates. All
//! denominators divide `V = Π_{a<b} (t_a - t_b)`, so the engine adds the
//! integers `(V / D_σ) · ξ_σ` and divides by `V` once at the end. The
//! coefficients of total degree `n` are the intersection numbers; lower
//! degrees must cancel exactly, and two different points must agree.

use num_traits::Zero;

use super::walker::BasisWalker;
use super::{Engine, Stats};
use crate::algebra::{Int, Mono, Rat, SparsePoly};
use crate::error::{Error, Result};
use crate::matroid::{Matroid, Perm};
use crate::taut::{
    factor_coeffs, ChernFactor, ChernKind, EvalFail, EvalResult, FixedPoint, KDesc, Scalar,
};

/// Largest ground set for which per-permutation dumps are produced.
pub const DUMP_LIMIT: usize = 5;

struct Factor {
    kind: ChernKind,
    desc: Option<KDesc>,
    var: usize,
}

/// A graded integrand on `X_E`: factors over shared matroids, each tagged
/// with the index of its bookkeeping variable.
pub struct GradedProblem {
    n1: usize,
    vars: Vec<String>,
    mats: Vec<Matroid>,
    factors: Vec<Factor>,
    monos: Vec<Vec<u32>>,
    /// `subtree[v][d]`: number of monomials in variables `v..` of degree `≤ d`.
    subtree: Vec<Vec<usize>>,
}

impl GradedProblem {
    pub fn new(n1: usize, vars: &[&str], factors: Vec<ChernFactor>) -> Result<Self> {
        if n1 == 0 {
            return Err(Error::EmptyGroundSetResult);
        }
        let mut mats = Vec::new();
        let mut out = Vec::with_capacity(factors.len());
        for f in factors {
            let var = vars.iter().position(|v| *v == f.var).ok_or_else(|| {
                Error::InvalidArgument(format!("factor variable {} not in {vars:?}", f.var))
            })?;
            let desc = match f.class() {
                Some(c) => {
                    if c.n1() != n1 {
                        return Err(Error::InvalidArgument(format!(
                            "class on {} elements in an integrand on {n1}",
                            c.n1()
                        )));
                    }
                    let d = c.desc().reindexed(mats.len());
                    mats.extend(c.matroids().iter().cloned());
                    Some(d)
                }
                None => None,
            };
            out.push(Factor {
                kind: f.kind,
                desc,
                var,
            });
        }
        let n = n1 - 1;
        let k = vars.len();
        let mut subtree = vec![vec![1usize; n + 1]; k + 1];
        for v in (0..k).rev() {
            for d in 0..=n {
                subtree[v][d] = (0..=d).map(|e| subtree[v + 1][d - e]).sum();
            }
        }
        let mut monos = Vec::with_capacity(subtree[0][n]);
        let mut cur = vec![0u32; k];
        fn gen(v: usize, rem: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if v == cur.len() {
                out.push(cur.clone());
                return;
            }
            for e in 0..=rem {
                cur[v] = e as u32;
                gen(v + 1, rem - e, cur, out);
            }
            cur[v] = 0;
        }
        gen(0, n, &mut cur, &mut monos);
        Ok(GradedProblem {
            n1,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            mats,
            factors: out,
            monos,
            subtree,
        })
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn vars(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }

    /// Per-variable coefficient lists of the integrand at one fixed point.
    fn per_var<R: Scalar>(
        &self,
        sigma: &Perm,
        bases: &[crate::matroid::Mask],
        t: &[R],
    ) -> EvalResult<Vec<Vec<R>>> {
        let n = self.n1 - 1;
        let mut unit = vec![R::zero(); n + 1];
        unit[0] = R::one();
        let mut pv = vec![unit; self.vars.len()];
        let fp = FixedPoint { sigma, bases };
        for f in &self.factors {
            let c = factor_coeffs(&f.kind, f.desc.as_ref(), self.n1, &self.mats, &fp, t, n)?;
            pv[f.var] = mul_trunc(&pv[f.var], &c, n)?;
        }
        Ok(pv)
    }

    /// Adds `w · Π_v pv[v][e_v]` into `acc` for every monomial `e`.
    fn accumulate<R: Scalar>(&self, pv: &[Vec<R>], w: &R, acc: &mut [R]) -> EvalResult<()> {
        let mut idx = 0;
        self.acc_rec(0, self.n1 - 1, w, pv, acc, &mut idx)
    }

    fn acc_rec<R: Scalar>(
        &self,
        v: usize,
        rem: usize,
        prod: &R,
        pv: &[Vec<R>],
        acc: &mut [R],
        idx: &mut usize,
    ) -> EvalResult<()> {
        if v == pv.len() {
            acc[*idx] = ck(acc[*idx].add(prod))?;
            *idx += 1;
            return Ok(());
        }
        for e in 0..=rem {
            let c = &pv[v][e];
            if c.is_zero() {
                *idx += self.subtree[v + 1][rem - e];
                continue;
            }
            let p = ck(prod.mul(c))?;
            self.acc_rec(v + 1, rem - e, &p, pv, acc, idx)?;
        }
        Ok(())
    }

    /// `Σ_σ (V / D_σ) ξ_σ` over a lexicographic range of permutations.
    fn block_sum<R: Scalar + DivExact>(
        &self,
        t: &[R],
        v: &R,
        lo: u64,
        hi: u64,
    ) -> EvalResult<Vec<R>> {
        let mut acc = vec![R::zero(); self.monos.len()];
        let mut walker = BasisWalker::new(&self.mats, self.n1, lo, hi - lo);
        let mut failure = None;
        while let Some(r) = walker.next_with(|sigma, bases| -> EvalResult<()> {
            let mut d = R::one();
            for i in 0..self.n1 - 1 {
                let diff = ck(t[sigma.at(i)].add(&ck(t[sigma.at(i + 1)].neg())?))?;
                d = ck(d.mul(&diff))?;
            }
            let w = v.div_exact(&d).ok_or(EvalFail::Overflow)?;
            let pv = self.per_var(sigma, bases, t)?;
            self.accumulate(&pv, &w, &mut acc)
        }) {
            if let Err(e) = r {
                failure = Some(e);
                break;
            }
        }
        match failure {
            Some(e) => Err(e),
            None => Ok(acc),
        }
    }
}

fn ck<T>(v: Option<T>) -> EvalResult<T> {
    v.ok_or(EvalFail::Overflow)
}

fn mul_trunc<R: Scalar>(a: &[R], b: &[R], n: usize) -> EvalResult<Vec<R>> {
    let mut out = vec![R::zero(); n + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] = ck(out[i + j].add(&ck(x.mul(y))?))?;
        }
    }
    Ok(out)
}

/// Exact division, failing when the quotient is not representable.
pub trait DivExact: Sized {
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

impl DivExact for i128 {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (*d != 0 && self % d == 0).then(|| self / d)
    }
}

impl DivExact for Rat {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!Zero::is_zero(d)).then(|| self / d)
    }
}

fn vandermonde(t: &[i64]) -> Int {
    let mut v = Int::from(1);
    for a in 0..t.len() {
        for b in (a + 1)..t.len() {
            v *= Int::from(t[a] - t[b]);
        }
    }
    v
}

fn rat_of(i: i64) -> Rat {
    Rat::from_integer(i.into())
}

impl Engine {
    /// Top-degree coefficients of `∫_{X_E}` of the integrand, as a
    /// polynomial in the bookkeeping variables with integer coefficients.
    /// Runs at two generic points and requires exact agreement.
    pub fn integrate_graded(&self, p: &GradedProblem) -> Result<SparsePoly> {
        self.check_ground(p.n1)?;
        let t1 = self.generic_point("graded", 0, p.n1);
        let mut attempt = 1;
        let mut t2 = self.generic_point("graded", attempt, p.n1);
        while t2 == t1 && p.n1 > 1 && attempt < 16 {
            attempt += 1;
            t2 = self.generic_point("graded", attempt, p.n1);
        }
        let r1 = self.integrate_graded_at(p, &t1)?;
        let r2 = self.integrate_graded_at(p, &t2)?;
        if r1 != r2 {
            return Err(Error::GenericPointMismatch);
        }
        Stats::bump(&self.stats.graded_runs, 1);
        Stats::bump(&self.stats.two_point_agreements, 1);
        Ok(r1)
    }

    /// One evaluation point, with the sub-degree and integrality checks.
    pub fn integrate_graded_at(&self, p: &GradedProblem, t: &[i64]) -> Result<SparsePoly> {
        if t.len() != p.n1 {
            return Err(Error::InvalidArgument(
                "evaluation point has the wrong length".into(),
            ));
        }
        let v = vandermonde(t);
        if v.is_zero() {
            return Err(Error::InvalidArgument(
                "evaluation point has repeated coordinates".into(),
            ));
        }
        let v128 = i128::try_from(&v).ok().filter(|_| !self.exact_only);
        let t128: Vec<i128> = t.iter().map(|&x| x as i128).collect();
        let trat: Vec<Rat> = t.iter().map(|&x| rat_of(x)).collect();
        let vrat = Rat::from_integer(v.clone());
        let blocks: Vec<Result<Vec<Rat>>> = self.map_blocks(p.n1, |lo, hi| {
            if let Some(v128) = v128 {
                match p.block_sum::<i128>(&t128, &v128, lo, hi) {
                    Ok(acc) => {
                        return Ok(acc
                            .into_iter()
                            .map(|x| Rat::from_integer(x.into()))
                            .collect())
                    }
                    Err(EvalFail::Err(e)) => return Err(e),
                    Err(EvalFail::Overflow) => {
                        Stats::bump(&self.stats.exact_fallback_blocks, 1);
                    }
                }
            }
            match p.block_sum::<Rat>(&trat, &vrat, lo, hi) {
                Ok(acc) => Ok(acc),
                Err(EvalFail::Err(e)) => Err(e),
                Err(EvalFail::Overflow) => unreachable!("rational arithmetic does not overflow"),
            }
        });
        let mut total = vec![<Rat as Zero>::zero(); p.monos.len()];
        for b in blocks {
            for (a, x) in total.iter_mut().zip(b?) {
                *a += x;
            }
        }
        self.finish(p, &total, &vrat)
    }

    fn finish(&self, p: &GradedProblem, total: &[Rat], v: &Rat) -> Result<SparsePoly> {
        let n = (p.n1 - 1) as u32;
        let mut out = SparsePoly::zero_owned(p.vars.clone());
        let mut checked = 0;
        for (e, a) in p.monos.iter().zip(total) {
            let deg: u32 = e.iter().sum();
            if deg < n {
                if !Zero::is_zero(a) {
                    return Err(Error::SubDegreeNonzero {
                        degree: deg as usize,
                    });
                }
                checked += 1;
            } else {
                let c = a / v;
                if !c.is_integer() {
                    return Err(Error::NonIntegral(crate::algebra::rat_to_string(&c)));
                }
                out.add_term(Mono(e.clone()), c);
            }
        }
        Stats::bump(&self.stats.subdegree_coefficients_checked, checked);
        Ok(out)
    }

    /// Reference implementation: per-σ rational polynomials from the naive
    /// greedy bases, divided by `D_σ` individually and summed.
    pub fn integrate_graded_reference(&self, p: &GradedProblem, t: &[Rat]) -> Result<SparsePoly> {
        let n = p.n1 - 1;
        let vars = p.vars();
        let mut sum = SparsePoly::zero(&vars);
        for sigma in Perm::all(p.n1) {
            let bases: Vec<_> = p.mats.iter().map(|m| m.lex_first_basis(&sigma)).collect();
            let pv = match p.per_var::<Rat>(&sigma, &bases, t) {
                Ok(pv) => pv,
                Err(EvalFail::Err(e)) => return Err(e),
                Err(EvalFail::Overflow) => unreachable!("rational arithmetic does not overflow"),
            };
            let mut term = SparsePoly::one(&vars);
            for (vi, coeffs) in pv.iter().enumerate() {
                let mut f = SparsePoly::zero(&vars);
                for (k, c) in coeffs.iter().enumerate() {
                    let mut e = vec![0; vars.len()];
                    e[vi] = k as u32;
                    f.add_term(Mono(e), c.clone());
                }
                term = (&term * &f).truncate_total_degree(n as u32);
            }
            let mut d = Rat::from_integer(1.into());
            for i in 0..n {
                d *= &t[sigma.at(i)] - &t[sigma.at(i + 1)];
            }
            sum = &sum + &term.scale(&d.recip());
        }
        extract_top(&sum, n as u32)
    }

    /// The generic evaluator contract: `ev(σ, t)` returns the localized
    /// class at `σ` evaluated at `t`, as a polynomial in bookkeeping
    /// variables whose degree-`d` coefficients have `t`-degree `d`.
    pub fn integrate_graded_with(
        &self,
        n1: usize,
        vars: &[&str],
        ev: &(dyn Fn(&Perm, &[Rat]) -> Result<SparsePoly> + Sync),
    ) -> Result<SparsePoly> {
        self.check_ground(n1)?;
        let n = n1.saturating_sub(1) as u32;
        let mut results = Vec::with_capacity(2);
        for attempt in 0..2 {
            let t: Vec<Rat> = self
                .generic_point("graded-generic", attempt, n1)
                .into_iter()
                .map(rat_of)
                .collect();
            let blocks: Vec<Result<SparsePoly>> = self.map_blocks(n1, |lo, hi| {
                let mut sigma = Perm::unrank(n1, lo);
                let mut acc = SparsePoly::zero(vars);
                for k in lo..hi {
                    let mut d = Rat::from_integer(1.into());
                    for i in 0..n as usize {
                        d *= &t[sigma.at(i)] - &t[sigma.at(i + 1)];
                    }
                    let val = ev(&sigma, &t)?.truncate_total_degree(n);
                    acc = acc.try_add(&val.scale(&d.recip()))?;
                    if k + 1 < hi {
                        sigma.advance();
                    }
                }
                Ok(acc)
            });
            let mut sum = SparsePoly::zero(vars);
            for b in blocks {
                sum = sum.try_add(&b?)?;
            }
            let top = extract_top(&sum, n)?;
            Stats::bump(
                &self.stats.subdegree_coefficients_checked,
                sum.terms().filter(|(e, _)| e.degree() < n).count() as u64,
            );
            results.push(top);
        }
        if results[0] != results[1] {
            return Err(Error::GenericPointMismatch);
        }
        Stats::bump(&self.stats.graded_runs, 1);
        Stats::bump(&self.stats.two_point_agreements, 1);
        Ok(results.swap_remove(0))
    }

    /// Per-permutation contributions `ξ_σ / D_σ` at the first generic
    /// point, for inspection at small `n`.
    pub fn graded_contributions(&self, p: &GradedProblem) -> Result<Vec<(Perm, SparsePoly)>> {
        if p.n1 > DUMP_LIMIT {
            return Err(Error::InvalidArgument(format!(
                "per-permutation dumps are limited to {DUMP_LIMIT} elements"
            )));
        }
        let t: Vec<Rat> = self
            .generic_point("graded", 0, p.n1)
            .into_iter()
            .map(rat_of)
            .collect();
        let n = p.n1 - 1;
        let vars = p.vars();
        let mut out = Vec::new();
        for sigma in Perm::all(p.n1) {
            let bases: Vec<_> = p.mats.iter().map(|m| m.lex_first_basis(&sigma)).collect();
            let pv = p.per_var::<Rat>(&sigma, &bases, &t).map_err(|e| match e {
                EvalFail::Err(e) => e,
                EvalFail::Overflow => unreachable!("rational arithmetic does not overflow"),
            })?;
            let mut d = Rat::from_integer(1.into());
            for i in 0..n {
                d *= &t[sigma.at(i)] - &t[sigma.at(i + 1)];
            }
            let mut acc = vec![<Rat as Zero>::zero(); p.monos.len()];
            p.accumulate(&pv, &d.recip(), &mut acc)
                .map_err(|_| Error::InvalidArgument("overflow in exact arithmetic".into()))?;
            let mut poly = SparsePoly::zero(&vars);
            for (e, c) in p.monos.iter().zip(acc) {
                poly.add_term(Mono(e.clone()), c);
            }
            out.push((sigma, poly));
        }
        Ok(out)
    }
}

/// Checks that every coefficient below degree `n` vanished and that the
/// degree-`n` part is integral, and returns that part.
fn extract_top(sum: &SparsePoly, n: u32) -> Result<SparsePoly> {
    for (e, _) in sum.terms() {
        if e.degree() < n {
            return Err(Error::SubDegreeNonzero {
                degree: e.degree() as usize,
            });
        }
    }
    let top = sum.homogeneous_part(n);
    if let Some((_, c)) = top.terms().find(|(_, c)| !c.is_integer()) {
        return Err(Error::NonIntegral(crate::algebra::rat_to_string(c)));
    }
    Ok(top)
}
