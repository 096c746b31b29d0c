//! The four-variable transform of the Tutte polynomial and the recursions
//! it satisfies over the minors of a matroid.

use super::tutte::{tutte_delcontr, TUTTE_VARS};
use crate::algebra::{Mono, Rat, SparsePoly};
use crate::error::{Error, Result};
use crate::matroid::subset;
use crate::matroid::Matroid;

pub const T4_VARS: [&str; 4] = ["x", "y", "z", "w"];

fn v(name: &str) -> SparsePoly {
    SparsePoly::var(&T4_VARS, name)
}

/// `(x+y)^{-1} (y+z)^r (x+w)^{|E|-r} T((x+y)/(y+z), (x+y)/(x+w))`, expanded
/// as `Σ T_{ij} (x+y)^{i+j} (y+z)^{r-i} (x+w)^{crk-j}` and divided by `x + y`.
pub fn t_transform_of(tutte: &SparsePoly, r: usize, crk: usize) -> Result<SparsePoly> {
    let xy = &v("x") + &v("y");
    let yz = &v("y") + &v("z");
    let xw = &v("x") + &v("w");
    let mut num = SparsePoly::zero(&T4_VARS);
    for (e, c) in tutte.terms() {
        let (i, j) = (e.0[0] as usize, e.0[1] as usize);
        if i > r || j > crk {
            return Err(Error::InexactDivision);
        }
        let t = &(&xy.pow((i + j) as u32) * &yz.pow((r - i) as u32)) * &xw.pow((crk - j) as u32);
        num = &num + &t.scale(c);
    }
    num.div_exact(&xy)?.ok_or(Error::InexactDivision)
}

pub fn t_transform(m: &Matroid) -> Result<SparsePoly> {
    t_transform_of(&tutte_delcontr(m), m.rank(), m.corank())
}

/// Sets the listed variables to zero.
pub fn zero_vars(p: &SparsePoly, idx: &[usize]) -> SparsePoly {
    let mut out = SparsePoly::zero_owned(p.vars().to_vec());
    for (e, c) in p.terms() {
        if idx.iter().all(|&i| e.0[i] == 0) {
            out.add_term(e.clone(), c.clone());
        }
    }
    out
}

/// Which of the two minor recursions failed, and for which pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionWitness {
    pub pivot: usize,
    /// 0 for the recursion in `x`, 1 for the one in `y`.
    pub which: usize,
}

/// Checks both recursions over minors at pivot `e`:
/// `t_M = t_M(0,y,z,w) + x Σ_{e ∈ S ⊊ E} t_{M|S}(0,y,z,w) t_{M/S}(x,0,z,w)` and
/// `t_M = t_M(x,0,z,w) + y Σ_{e ∉ S, ∅ ≠ S ⊊ E} t_{M|S}(0,y,z,w) t_{M/S}(x,0,z,w)`.
pub fn coalgebra_recursion_check(m: &Matroid, e: usize) -> Result<Option<RecursionWitness>> {
    coalgebra_recursion_check_signed(m, e, 1)
}

pub(crate) fn coalgebra_recursion_check_signed(
    m: &Matroid,
    e: usize,
    sign: i64,
) -> Result<Option<RecursionWitness>> {
    if e >= m.n1() {
        return Err(Error::InvalidArgument(format!(
            "pivot {e} on a ground set of size {}",
            m.n1()
        )));
    }
    let full = m.ground();
    let t = t_transform(m)?;
    let mut sums = [SparsePoly::zero(&T4_VARS), SparsePoly::zero(&T4_VARS)];
    for s in subset::subsets(full) {
        if s == 0 || s == full {
            continue;
        }
        let left = zero_vars(&t_transform(&m.restrict(s)?)?, &[0]);
        let right = zero_vars(&t_transform(&m.contract(s)?)?, &[1]);
        let prod = &left * &right;
        let slot = usize::from(!subset::contains(s, e));
        sums[slot] = &sums[slot] + &prod;
    }
    let rhs = [
        &zero_vars(&t, &[0]) + &(&v("x") * &sums[0]).scale(&Rat::from_integer(sign.into())),
        &zero_vars(&t, &[1]) + &(&v("y") * &sums[1]),
    ];
    for (which, r) in rhs.iter().enumerate() {
        if *r != t {
            return Ok(Some(RecursionWitness { pivot: e, which }));
        }
    }
    Ok(None)
}

/// `t_M(y, x, w, z)`: the transform of the dual matroid.
pub fn swap_dual(p: &SparsePoly) -> SparsePoly {
    let mut out = SparsePoly::zero_owned(p.vars().to_vec());
    for (e, c) in p.terms() {
        let f = &e.0;
        out.add_term(Mono(vec![f[1], f[0], f[3], f[2]]), c.clone());
    }
    out
}

/// `t_M(x+1, y, 1, 0)` as a polynomial in `x, y`.
pub fn cf_specialization(t: &SparsePoly) -> Result<SparsePoly> {
    let xv = SparsePoly::var(&TUTTE_VARS, "x");
    let yv = SparsePoly::var(&TUTTE_VARS, "y");
    let one = SparsePoly::one(&TUTTE_VARS);
    t.substitute(&[&xv + &one, yv, one, SparsePoly::zero(&TUTTE_VARS)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(terms: &[([u32; 4], i64)]) -> SparsePoly {
        SparsePoly::from_terms(
            &T4_VARS,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), Rat::from_integer((*c).into()))),
        )
    }

    #[test]
    fn small_transforms() {
        for m in [
            Matroid::uniform(0, 1).unwrap(),
            Matroid::uniform(1, 1).unwrap(),
        ] {
            assert_eq!(t_transform(&m).unwrap(), SparsePoly::one(&T4_VARS));
        }
        let u12 = t_transform(&Matroid::uniform(1, 2).unwrap()).unwrap();
        assert_eq!(
            u12,
            parse(&[
                ([1, 0, 0, 0], 1),
                ([0, 1, 0, 0], 1),
                ([0, 0, 1, 0], 1),
                ([0, 0, 0, 1], 1)
            ])
        );
        assert_eq!(u12.to_string(), "x + y + z + w");
    }

    #[test]
    fn constant_term_is_inexact() {
        let bad = SparsePoly::from_terms(&TUTTE_VARS, [(vec![0, 0], Rat::from_integer(1.into()))]);
        assert!(matches!(
            t_transform_of(&bad, 1, 1),
            Err(Error::InexactDivision)
        ));
    }

    #[test]
    fn dual_swaps_variables() {
        let m = Matroid::from_basis_lists(
            4,
            &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]],
        )
        .unwrap();
        assert_eq!(
            t_transform(&m.dual()).unwrap(),
            swap_dual(&t_transform(&m).unwrap())
        );
    }

    #[test]
    fn recursions_hold_and_wrong_sign_fails() {
        let m = Matroid::uniform(2, 4).unwrap();
        assert_eq!(coalgebra_recursion_check(&m, 0).unwrap(), None);
        assert_eq!(
            coalgebra_recursion_check_signed(&m, 0, -1).unwrap(),
            Some(RecursionWitness { pivot: 0, which: 0 })
        );
    }
}
