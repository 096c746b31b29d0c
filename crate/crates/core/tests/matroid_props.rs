mod common;

use common::{arb_matroid, binary_matroid};
use proptest::prelude::*;
use tautmat::genperm::{GenPerm, Sense};
use tautmat::invariants::tutte_delcontr;
use tautmat::io::format::{matroid_from_value, matroid_to_value};
use tautmat::matroid::subset;
use tautmat::matroid::{Matroid, Perm};
use tautmat::taut::direct_sum_check;

fn arb_perm(n1: usize) -> impl Strategy<Value = Perm> {
    Just((0..n1).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::new(v).unwrap())
}

fn matroid_and_perm() -> impl Strategy<Value = (Matroid, Perm)> {
    arb_matroid(2, 7).prop_flat_map(|m| {
        let n1 = m.n1();
        (Just(m), arb_perm(n1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjacent_bases_differ_by_the_swapped_pair((m, sigma) in matroid_and_perm(), i in 0usize..6) {
        let i = i % (m.n1() - 1);
        let a = m.lex_first_basis(&sigma);
        let b = m.lex_first_basis(&sigma.swap_adjacent(i));
        let pair = subset::singleton(sigma.at(i)) | subset::singleton(sigma.at(i + 1));
        prop_assert!(a == b || a ^ b == pair);
    }

    #[test]
    fn dual_basis_is_complement_under_reversal((m, sigma) in matroid_and_perm()) {
        let d = m.dual().lex_first_basis(&sigma);
        prop_assert_eq!(d, m.ground() & !m.lex_first_basis(&sigma.reversed()));
    }

    #[test]
    fn greedy_matches_brute_force((m, sigma) in matroid_and_perm()) {
        prop_assert_eq!(m.lex_first_basis(&sigma), m.lex_first_basis_brute(&sigma));
    }

    #[test]
    fn base_polytope_vertex_is_the_greedy_basis((m, sigma) in matroid_and_perm()) {
        let v = GenPerm::base_polytope(&m).vertex(&sigma, Sense::Max);
        let b = m.lex_first_basis(&sigma);
        let ind: Vec<i64> = (0..m.n1()).map(|i| subset::contains(b, i) as i64).collect();
        prop_assert_eq!(v, ind);
    }

    #[test]
    fn duality_is_an_involution_and_swaps_minors(m in arb_matroid(2, 7), i in 0usize..7) {
        prop_assert_eq!(m.dual().dual(), m.clone());
        let s = subset::singleton(i % m.n1());
        prop_assert_eq!(m.delete(s).unwrap().dual(), m.dual().contract(s).unwrap());
        prop_assert_eq!(m.contract(s).unwrap().dual(), m.dual().delete(s).unwrap());
    }

    #[test]
    fn rank_is_submodular(m in arb_matroid(1, 7)) {
        prop_assert!(m.check_submodular().is_ok());
        prop_assert!(GenPerm::base_polytope(&m).check_submodular().is_ok());
    }

    #[test]
    fn direct_sums_localize_factorwise(a in arb_matroid(1, 3), b in arb_matroid(1, 3)) {
        prop_assert_eq!(direct_sum_check(&a, &b).unwrap(), None);
        let t = tutte_delcontr(&a.direct_sum(&b).unwrap());
        prop_assert_eq!(t, &tutte_delcontr(&a) * &tutte_delcontr(&b));
    }

    #[test]
    fn json_round_trip(m in arb_matroid(1, 7)) {
        prop_assert_eq!(matroid_from_value(matroid_to_value(&m), "t").unwrap(), m);
    }

    #[test]
    fn components_match_polytope_dimension(m in arb_matroid(1, 7)) {
        prop_assert_eq!(m.base_polytope_dim(), m.n1() - m.connected_components().len());
    }
}

#[test]
fn fano_is_binary() {
    let fano = binary_matroid(&[1, 2, 3, 4, 5, 6, 7]);
    assert_eq!(fano.bases().len(), 28);
    assert_eq!(fano, tautmat::io::corpus::by_name("F7").unwrap());
}

#[test]
fn vamos_greedy_matches_brute_force() {
    let v = tautmat::io::corpus::by_name("V8").unwrap();
    let e = tautmat::engine::Engine::default();
    for k in 0..200 {
        let s = e.random_perm("vamos", k, 8);
        assert_eq!(v.lex_first_basis(&s), v.lex_first_basis_brute(&s));
    }
}
