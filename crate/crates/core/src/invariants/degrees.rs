//! Intersection numbers of tautological Chern classes with the lifts of
//! the two hyperplane classes, by localization.

use super::transform::T4_VARS;
use crate::algebra::{Int, SparsePoly};
use crate::engine::{Engine, GradedProblem};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::taut::{ChernFactor, KClass};

/// `Σ (∫ α^i β^j c_k(S_M^∨) c_l(Q_M)) x^i y^j z^k w^l` over `i+j+k+l = n`.
pub fn taut_degree_polynomial(engine: &Engine, m: &Matroid) -> Result<SparsePoly> {
    let p = GradedProblem::new(
        m.n1(),
        &T4_VARS,
        vec![
            ChernFactor::alpha("x"),
            ChernFactor::beta("y"),
            ChernFactor::chern(KClass::s(m).dual(), "z"),
            ChernFactor::chern(KClass::q(m), "w"),
        ],
    )?;
    engine.integrate_graded(&p)
}

/// `(∫ c_{r-1}(S^∨) c_{|E|-r}(Q), ∫ c_r(S^∨) c_{|E|-r-1}(Q))` read off the
/// degree polynomial; a Chern class of negative index is zero.
pub fn beta_from_degrees(t: &SparsePoly, m: &Matroid) -> (Int, Int) {
    let (r, c) = (m.rank() as u32, m.corank() as u32);
    let get = |k: Option<u32>, l: Option<u32>| match (k, l) {
        (Some(k), Some(l)) => t.coefficient_of(&[0, 0, k, l]).to_integer(),
        _ => Int::from(0),
    };
    (
        get(r.checked_sub(1), Some(c)),
        get(Some(r), c.checked_sub(1)),
    )
}

/// Generating polynomial of the mixed degrees
/// `∫ α^i β^j c_{k_1}(S^∨_{M_1}) ... c_{l_1}(Q_{N_1}) ...` in variables
/// `x, y, z1.., w1..`.
pub fn mixed_degree_generating(
    engine: &Engine,
    subs: &[Matroid],
    quots: &[Matroid],
) -> Result<SparsePoly> {
    let n1 = subs
        .iter()
        .chain(quots)
        .map(Matroid::n1)
        .next()
        .ok_or_else(|| Error::InvalidArgument("no matroids given".into()))?;
    if subs.iter().chain(quots).any(|m| m.n1() != n1) {
        return Err(Error::InvalidArgument(
            "matroids on different ground sets".into(),
        ));
    }
    mixed_on(engine, n1, subs, quots)
}

/// As [`mixed_degree_generating`], on an explicit ground set so that the
/// factor lists may be empty.
pub fn mixed_on(
    engine: &Engine,
    n1: usize,
    subs: &[Matroid],
    quots: &[Matroid],
) -> Result<SparsePoly> {
    let mut names = vec!["x".to_string(), "y".to_string()];
    names.extend((1..=subs.len()).map(|i| format!("z{i}")));
    names.extend((1..=quots.len()).map(|i| format!("w{i}")));
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut factors = vec![ChernFactor::alpha("x"), ChernFactor::beta("y")];
    for (i, m) in subs.iter().enumerate() {
        factors.push(ChernFactor::chern(KClass::s(m).dual(), vars[2 + i]));
    }
    for (i, m) in quots.iter().enumerate() {
        factors.push(ChernFactor::chern(KClass::q(m), vars[2 + subs.len() + i]));
    }
    let p = GradedProblem::new(n1, &vars, factors)?;
    engine.integrate_graded(&p)
}
