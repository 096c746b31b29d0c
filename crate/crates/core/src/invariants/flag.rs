//! Tutte polynomials of flag matroids and of matroid quotients.

use num_traits::{One, Signed, Zero};

use crate::algebra::{Mono, Rat, SparsePoly};
use crate::engine::{Engine, GradedProblem};
use crate::error::{Error, Result};
use crate::genperm::GenPerm;
use crate::matroid::subset;
use crate::matroid::{FlagMatroid, Matroid, Perm};
use crate::taut::{ChernFactor, KClass, Laurent};

pub const XY: [&str; 2] = ["x", "y"];
pub const XYZ: [&str; 3] = ["x", "y", "z"];

fn lin(vars: &[&str], var: &str, c: i64) -> SparsePoly {
    &SparsePoly::var(vars, var) + &SparsePoly::constant(vars, Rat::from_integer(c.into()))
}

/// The flag-geometric Tutte polynomial
/// `Σ_{i,j} deg_α(c(S^∨_{M_1}) ... c(S^∨_{M_{k-1}}) c_i(S^∨_{M_k}) c_j(Q_{M_1}))
/// x^{r_k - i} y^{|E| - r_1 - j} (1 - y)^j`.
pub fn flag_tutte_kt(engine: &Engine, f: &FlagMatroid) -> Result<SparsePoly> {
    let ms = f.constituents();
    let k = ms.len();
    let (first, last) = (&ms[0], &ms[k - 1]);
    let mut names = vec!["a".to_string()];
    names.extend((1..k).map(|i| format!("c{i}")));
    names.push("z".into());
    names.push("w".into());
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut factors = vec![ChernFactor::alpha("a")];
    for (i, m) in ms[..k - 1].iter().enumerate() {
        factors.push(ChernFactor::chern(KClass::s(m).dual(), vars[1 + i]));
    }
    factors.push(ChernFactor::chern(KClass::s(last).dual(), "z"));
    factors.push(ChernFactor::chern(KClass::q(first), "w"));
    let top = engine.integrate_graded(&GradedProblem::new(f.n1(), &vars, factors)?)?;
    let (rk, r1, n1) = (last.rank(), first.rank(), f.n1());
    let one_minus_y = &SparsePoly::one(&XY) - &SparsePoly::var(&XY, "y");
    let mut out = SparsePoly::zero(&XY);
    for (e, c) in top.terms() {
        let i = e.0[k] as usize;
        let j = e.0[k + 1] as usize;
        let mut t = SparsePoly::zero(&XY);
        t.add_term(Mono(vec![(rk - i) as u32, (n1 - r1 - j) as u32]), c.clone());
        out = &out + &(&t * &one_minus_y.pow(j as u32));
    }
    Ok(out)
}

/// `Kχ(q) = (-1)^{r_1 + ... + r_k} KT(1 - q, 0)`; its coefficients must
/// alternate in sign.
pub fn flag_kchi(engine: &Engine, f: &FlagMatroid) -> Result<SparsePoly> {
    let kt = flag_tutte_kt(engine, f)?;
    let q = ["q"];
    let one_minus_q = &SparsePoly::one(&q) - &SparsePoly::var(&q, "q");
    let sign: usize = f.ranks().iter().sum();
    let mut out = kt.substitute(&[one_minus_q, SparsePoly::zero(&q)])?;
    if sign % 2 == 1 {
        out = out.scale(&-Rat::one());
    }
    if !alternates(&out) {
        return Err(Error::PropertyViolation(format!(
            "coefficients of Kχ = {out} do not alternate"
        )));
    }
    Ok(out)
}

fn require_quotient(m1: &Matroid, m2: &Matroid) -> Result<()> {
    if m1.n1() != m2.n1() {
        return Err(Error::InvalidArgument(
            "matroids on different ground sets".into(),
        ));
    }
    if let Some(f) = m1.quotient_witness(m2) {
        return Err(Error::NotAQuotient {
            flat: subset::elems(f),
        });
    }
    Ok(())
}

/// The defining subset sum
/// `Σ_A (x-1)^{r_1 - rk_1 A} (y-1)^{|A| - rk_2 A} z^{r_2 - r_1 - rk_2 A + rk_1 A}`.
pub fn lvt_subset_sum(m1: &Matroid, m2: &Matroid) -> Result<SparsePoly> {
    require_quotient(m1, m2)?;
    let (r1, r2) = (m1.rank(), m2.rank());
    let xm = lin(&XYZ, "x", -1);
    let ym = lin(&XYZ, "y", -1);
    let z = SparsePoly::var(&XYZ, "z");
    let mut out = SparsePoly::zero(&XYZ);
    for a in subset::subsets(m1.ground()) {
        let (k1, k2) = (m1.rk(a), m2.rk(a));
        let t = &(&xm.pow((r1 - k1) as u32) * &ym.pow((subset::card(a) - k2) as u32))
            * &z.pow((r2 - r1 + k1 - k2) as u32);
        out = &out + &t;
    }
    Ok(out)
}

/// `Σ deg_α(c_i(S^∨_{M_1}) c_j(Q^∨_{M_2}) c_k(S^∨_{M_1,M_2}))
/// x^{r_1-i} y^{|E|-r_2-j} (y-1)^j (z+1)^{r_2-r_1-k}`.
pub fn lvt_localized(engine: &Engine, m1: &Matroid, m2: &Matroid) -> Result<SparsePoly> {
    require_quotient(m1, m2)?;
    let vars = ["a", "p", "q", "k"];
    let factors = vec![
        ChernFactor::alpha("a"),
        ChernFactor::chern(KClass::s(m1).dual(), "p"),
        ChernFactor::chern(KClass::q(m2).dual(), "q"),
        ChernFactor::chern(KClass::s_dual_quotient(m1, m2)?, "k"),
    ];
    let top = engine.integrate_graded(&GradedProblem::new(m1.n1(), &vars, factors)?)?;
    let (r1, r2, n1) = (m1.rank(), m2.rank(), m1.n1());
    let ym = lin(&XYZ, "y", -1);
    let zp = lin(&XYZ, "z", 1);
    let mut out = SparsePoly::zero(&XYZ);
    for (e, c) in top.terms() {
        let (i, j, k) = (e.0[1] as usize, e.0[2] as usize, e.0[3] as usize);
        let mut t = SparsePoly::zero(&XYZ);
        t.add_term(
            Mono(vec![(r1 - i) as u32, (n1 - r2 - j) as u32, 0]),
            c.clone(),
        );
        out = &out + &(&(&t * &ym.pow(j as u32)) * &zp.pow((r2 - r1 - k) as u32));
    }
    Ok(out)
}

/// The Las Vergnas Tutte polynomial with both routes compared.
pub fn lvt(engine: &Engine, m1: &Matroid, m2: &Matroid) -> Result<SparsePoly> {
    let a = lvt_subset_sum(m1, m2)?;
    let b = lvt_localized(engine, m1, m2)?;
    if a != b {
        return Err(Error::RouteMismatch(format!(
            "Las Vergnas Tutte: subset sum {a}, localization {b}"
        )));
    }
    Ok(a)
}

/// Splits `[S_M]` and `[Q_M]` into line bundles along the full Higgs lift
/// `M_0, ..., M_{n+1}`:
/// `[S_M] = Σ_{i<r} O(D_{-P(M_{i+1})})^∨ ⊗ O(D_{-P(M_i)})` and
/// `[Q_M] = Σ_{r≤j≤n} O(D_{P(M_j^⊥)}) ⊗ O(D_{P(M_{j+1}^⊥)})^∨`.
/// Each summand must localize to a single `T_i^{-1}`, and the
/// sums must equal the tautological classes. Returns a failing permutation.
pub fn higgs_chern_roots_check(m: &Matroid) -> Result<Option<Perm>> {
    let lift = m.higgs_lift();
    let mats = lift.constituents();
    let (r, n1) = (m.rank(), m.n1());
    let neg = |k: usize| KClass::line(&GenPerm::base_polytope(&mats[k]).negate());
    let dual_poly = |k: usize| KClass::line(&GenPerm::base_polytope(&mats[k].dual()));
    let s_roots: Vec<KClass> = (0..r)
        .map(|i| KClass::product(&[&neg(i + 1).dual(), &neg(i)]))
        .collect::<Result<_>>()?;
    let q_roots: Vec<KClass> = (r..n1)
        .map(|j| KClass::product(&[&dual_poly(j), &dual_poly(j + 1).dual()]))
        .collect::<Result<_>>()?;
    let (s, q) = (KClass::s(m), KClass::q(m));
    let single = |l: &Laurent, power: i32| {
        let terms: Vec<_> = l.terms().collect();
        matches!(terms.as_slice(), [(e, 1)] if e.iter().filter(|&&x| x != 0).count() == 1 && e.contains(&power))
    };
    for sigma in Perm::all(n1) {
        let mut sum_s = Laurent::zero();
        for c in &s_roots {
            let l = c.at(&sigma)?;
            if !single(&l, -1) {
                return Ok(Some(sigma));
            }
            sum_s = sum_s.add(&l);
        }
        let mut sum_q = Laurent::zero();
        for c in &q_roots {
            let l = c.at(&sigma)?;
            if !single(&l, -1) {
                return Ok(Some(sigma));
            }
            sum_q = sum_q.add(&l);
        }
        if sum_s != s.at(&sigma)? || sum_q != q.at(&sigma)? {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}

/// `true` if the nonzero coefficients of a univariate polynomial
/// alternate in sign with the degree.
pub fn alternates(p: &SparsePoly) -> bool {
    let mut sign: Option<bool> = None;
    for (e, c) in p.terms() {
        if c.is_zero() {
            continue;
        }
        let s = c.is_positive() == (e.0[0] % 2 == 0);
        if *sign.get_or_insert(s) != s {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::tutte::tutte_delcontr;

    fn engine() -> Engine {
        Engine::new(3, 1)
    }

    #[test]
    fn single_constituent_is_tutte() {
        let m = Matroid::uniform(2, 4).unwrap();
        let f = FlagMatroid::new(vec![m.clone()]).unwrap();
        assert_eq!(flag_tutte_kt(&engine(), &f).unwrap(), tutte_delcontr(&m));
    }

    #[test]
    fn uniform_rank_one_head() {
        let m = Matroid::uniform(2, 4).unwrap();
        let f = FlagMatroid::new(vec![Matroid::uniform(1, 4).unwrap(), m]).unwrap();
        let kt = flag_tutte_kt(&engine(), &f).unwrap();
        let at_y0 = kt
            .substitute(&[SparsePoly::var(&["x"], "x"), SparsePoly::zero(&["x"])])
            .unwrap();
        assert_eq!(at_y0.to_string(), "x^2");
    }

    #[test]
    fn kchi_alternates() {
        let f = FlagMatroid::new(vec![
            Matroid::uniform(1, 3).unwrap(),
            Matroid::uniform(2, 3).unwrap(),
        ])
        .unwrap();
        let k = flag_kchi(&engine(), &f).unwrap();
        assert!(alternates(&k));
    }

    #[test]
    fn lvt_routes_and_diagonal() {
        let e = engine();
        let (a, b) = (
            Matroid::uniform(1, 3).unwrap(),
            Matroid::uniform(2, 3).unwrap(),
        );
        lvt(&e, &a, &b).unwrap();
        let m = Matroid::uniform(2, 4).unwrap();
        let d = lvt(&e, &m, &m).unwrap();
        let t = tutte_delcontr(&m).with_vars(&XYZ).unwrap();
        assert_eq!(d, t);
    }

    #[test]
    fn higgs_roots() {
        for m in [
            Matroid::uniform(2, 4).unwrap(),
            Matroid::from_basis_lists(4, &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]])
                .unwrap(),
            Matroid::from_basis_lists(4, &[vec![0], vec![1]]).unwrap(),
        ] {
            assert_eq!(higgs_chern_roots_check(&m).unwrap(), None);
        }
    }

    #[test]
    fn non_quotient() {
        let a = Matroid::from_basis_lists(3, &[vec![0], vec![1]]).unwrap();
        let b = Matroid::from_basis_lists(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        assert!(matches!(
            lvt(&engine(), &a, &b),
            Err(Error::NotAQuotient { .. })
        ));
    }
}
