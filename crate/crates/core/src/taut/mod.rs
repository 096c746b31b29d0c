//! Tautological classes of matroids localized at the torus-fixed points of
//! the permutohedral variety, and their Chern classes.

mod chern;
mod kclass;
mod laurent;

pub use chern::{
    chern_from_roots, factor_coeffs, powers, roots, ChernFactor, ChernKind, EvalFail, EvalResult,
    Scalar,
};
pub use kclass::{FixedPoint, KClass, KDesc};
pub use laurent::Laurent;

use crate::error::Result;
use crate::matroid::subset::{self, Mask};
use crate::matroid::{Chain, Matroid, Perm};

/// Minors `M|S_{i+1}/S_i` over the gaps of a chain, from `S_0 = ∅` up to
/// `S_{k+1} = E`. The boundary stratum of the chain is the product of the
/// permutohedral varieties of these ground sets, and tautological classes
/// restrict factorwise.
pub fn restrict_to_chain(m: &Matroid, chain: &Chain) -> Result<Vec<Matroid>> {
    chain
        .gaps()
        .into_iter()
        .map(|(lo, hi)| m.minor(hi, lo))
        .collect()
}

/// The permutation of `E` whose initial segments run through the chain:
/// first the elements of `S_1` in the order of `parts[0]`, then those of
/// `S_2 ∖ S_1` in the order of `parts[1]`, and so on. Each `parts[i]`
/// permutes the relabeled gap `{0, ..., |S_{i+1} ∖ S_i| - 1}`.
pub fn composite_perm(chain: &Chain, parts: &[Perm]) -> Result<Perm> {
    let mut images = Vec::with_capacity(chain.n1());
    for ((lo, hi), p) in chain.gaps().into_iter().zip(parts) {
        let gap: Vec<usize> = subset::elems(hi & !lo);
        images.extend(p.iter().map(|k| gap[k]));
    }
    Perm::new(images)
}

/// The permutation `σ` restricted to the elements of `within`, relabeled
/// to `{0, ..., |within| - 1}`.
pub fn induced_perm(sigma: &Perm, within: Mask) -> Perm {
    let images = sigma
        .iter()
        .filter(|&i| subset::contains(within, i))
        .map(|i| subset::card(within & ((1 << i) - 1)))
        .collect();
    Perm::new(images).expect("induced permutation")
}

/// Checks `[S_{M_1 ⊕ M_2}]_σ` against the union of the factor
/// localizations at every fixed point; returns the first failing `σ`.
pub fn direct_sum_check(m1: &Matroid, m2: &Matroid) -> Result<Option<Perm>> {
    let sum = m1.direct_sum(m2)?;
    direct_sum_check_with(&KClass::s(&sum), m1, m2)
}

/// Same as [`direct_sum_check`], for an arbitrary candidate class of the sum.
pub fn direct_sum_check_with(class: &KClass, m1: &Matroid, m2: &Matroid) -> Result<Option<Perm>> {
    let n1 = m1.n1() + m2.n1();
    let lower = subset::full(m1.n1());
    let upper = subset::full(n1) & !lower;
    for sigma in Perm::all(n1) {
        let b1 = m1.lex_first_basis(&induced_perm(&sigma, lower));
        let b2 = m2.lex_first_basis(&induced_perm(&sigma, upper));
        let expected_mask = b1 | b2 << m1.n1();
        let mut expected = Laurent::zero();
        for i in subset::iter(expected_mask) {
            expected.add_term(unit(n1, i), 1);
        }
        if class.at(&sigma)? != expected {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}

fn unit(n1: usize, i: usize) -> Vec<i32> {
    let mut m = vec![0; n1];
    m[i] = -1;
    m
}

/// Every fixed-point value of a class, in lexicographic order of `σ`.
pub fn localizations(class: &KClass) -> Result<Vec<(Perm, Laurent)>> {
    Perm::all(class.n1())
        .map(|s| class.at(&s).map(|l| (s, l)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genperm::GenPerm;

    fn example_sum() -> Matroid {
        Matroid::from_basis_lists(3, &[vec![0, 2], vec![1, 2]]).unwrap()
    }

    #[test]
    fn s_class_example() {
        let s = KClass::s(&example_sum());
        let l = s.at(&Perm::new(vec![2, 0, 1]).unwrap()).unwrap();
        let mut want = Laurent::zero();
        want.add_term(vec![-1, 0, 0], 1);
        want.add_term(vec![0, 0, -1], 1);
        assert_eq!(l, want);
    }

    #[test]
    fn line_bundles_of_simplices() {
        let n1 = 3;
        let sigma = Perm::new(vec![1, 2, 0]).unwrap();
        let d = KClass::line(&GenPerm::delta(n1)).at(&sigma).unwrap();
        assert_eq!(d, Laurent::var_power(n1, 0, -1));
        let nd = KClass::line(&GenPerm::nabla(n1)).at(&sigma).unwrap();
        assert_eq!(nd, Laurent::var_power(n1, 1, 1));
    }

    #[test]
    fn direct_sum_passes_and_corruption_fails() {
        let a = Matroid::uniform(1, 2).unwrap();
        let b = Matroid::uniform(1, 1).unwrap();
        assert_eq!(direct_sum_check(&a, &b).unwrap(), None);
        let wrong = KClass::q(&a.direct_sum(&b).unwrap());
        assert!(direct_sum_check_with(&wrong, &a, &b).unwrap().is_some());
    }

    #[test]
    fn chain_restriction_factors() {
        let m = Matroid::uniform(2, 4).unwrap();
        let c = Chain::new(vec![0b0001], 4).unwrap();
        let f = restrict_to_chain(&m, &c).unwrap();
        assert_eq!(f[0], Matroid::uniform(1, 1).unwrap());
        assert_eq!(f[1], Matroid::uniform(1, 3).unwrap());
    }
}
