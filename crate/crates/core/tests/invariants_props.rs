mod common;

use common::{arb_loopless, arb_matroid, engine};
use proptest::prelude::*;
use tautmat::algebra::logconcave::logconcave_unbroken_check;
use tautmat::algebra::SparsePoly;
use tautmat::invariants::bridge::{fs_tutte, g_polynomial};
use tautmat::invariants::flag::{
    alternates, flag_kchi, flag_tutte_kt, higgs_chern_roots_check, lvt,
};
use tautmat::invariants::transform::{coalgebra_recursion_check, swap_dual};
use tautmat::invariants::weights::{mw_balance_check, mw_chern_dichotomy_check, MinorIntegrals};
use tautmat::invariants::*;
use tautmat::matroid::{FlagMatroid, Matroid};

fn truncation(m: &Matroid) -> Matroid {
    m.higgs_lift().constituents()[m.rank() - 1].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn degrees_equal_transform(m in arb_matroid(1, 6)) {
        let d = taut_degree_polynomial(&engine(), &m).unwrap();
        prop_assert_eq!(&d, &t_transform(&m).unwrap());
        prop_assert_eq!(beta_from_degrees(&d, &m), beta_pair(&m));
    }

    #[test]
    fn duality_swaps_degree_variables(m in arb_matroid(1, 6)) {
        let e = engine();
        let d = taut_degree_polynomial(&e, &m).unwrap();
        prop_assert_eq!(taut_degree_polynomial(&e, &m.dual()).unwrap(), swap_dual(&d));
    }

    #[test]
    fn three_tutte_routes(m in arb_matroid(1, 7)) {
        let t = tutte_delcontr(&m);
        prop_assert_eq!(&t, &tutte_coranknullity(&m));
        prop_assert_eq!(&t, &tutte_convolution(&m));
        let at22 = tautmat::invariants::tutte::tutte_at(&t, 2, 2);
        prop_assert_eq!(at22, tautmat::algebra::int(1 << m.n1()));
    }

    #[test]
    fn coalgebra_recursions(m in arb_matroid(1, 6), e in 0usize..6) {
        prop_assert_eq!(coalgebra_recursion_check(&m, e % m.n1()).unwrap(), None);
    }

    #[test]
    fn transform_is_log_concave(m in arb_matroid(1, 7)) {
        let t = t_transform(&m).unwrap();
        prop_assert_eq!(logconcave_unbroken_check(&t, (m.n1() - 1) as u32).unwrap(), None);
    }

    #[test]
    fn weights_balance(m in arb_matroid(2, 6)) {
        prop_assume!(m.rank() >= 1);
        let e = engine();
        let b = bergman_weight(&e, &m).unwrap();
        prop_assert_eq!(mw_balance_check(&b), None);
        for k in 0..m.rank() {
            let w = csm_weight(&e, &m, k).unwrap();
            prop_assert_eq!(mw_balance_check(&w), None);
            if k + 1 == m.rank() {
                prop_assert_eq!(&w, &b);
            }
        }
    }

    #[test]
    fn chern_restrictions_are_zero_or_one(m in arb_matroid(2, 5), j in 0usize..5) {
        let e = engine();
        let mut ints = MinorIntegrals::new(&e);
        prop_assert_eq!(mw_chern_dichotomy_check(&mut ints, &m, j % m.n1()).unwrap(), None);
    }

    #[test]
    fn higgs_lift_splits_tautological_classes(m in arb_matroid(1, 6)) {
        prop_assert_eq!(higgs_chern_roots_check(&m).unwrap(), None);
    }

    #[test]
    fn flag_invariants(m in arb_loopless(2, 6)) {
        prop_assume!(m.rank() >= 1);
        let e = engine();
        let n1 = m.n1();
        let f = FlagMatroid::new(vec![Matroid::uniform(1, n1).unwrap(), m.clone()]).unwrap();
        let kt = flag_tutte_kt(&e, &f).unwrap();
        let x = SparsePoly::var(&["x"], "x");
        let at_y0 = kt.substitute(&[x.clone(), SparsePoly::zero(&["x"])]).unwrap();
        prop_assert_eq!(at_y0, x.pow(m.rank() as u32));
        prop_assert!(alternates(&flag_kchi(&e, &f).unwrap()));
        let tr = truncation(&m);
        lvt(&e, &tr, &m).unwrap();
        let diag = lvt(&e, &m, &m).unwrap();
        prop_assert_eq!(diag, tutte_delcontr(&m).with_vars(&["x", "y", "z"]).unwrap());
    }

    #[test]
    fn mixed_degrees_are_log_concave(m in arb_matroid(2, 6)) {
        prop_assume!(m.rank() >= 1);
        let p = mixed_degree_generating(&engine(), &[truncation(&m)], std::slice::from_ref(&m)).unwrap();
        prop_assert_eq!(logconcave_unbroken_check(&p, (m.n1() - 1) as u32).unwrap(), None);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn euler_characteristics_give_tutte(m in arb_matroid(1, 5)) {
        let fs = fs_tutte(&engine(), &m).unwrap();
        let t = tutte_delcontr(&m);
        let uv = SparsePoly::from_terms(&["u", "v"], t.terms().map(|(e, c)| (e.0.clone(), c.clone())));
        prop_assert_eq!(fs, uv);
    }

    #[test]
    fn g_polynomial_routes(m in arb_loopless(2, 5)) {
        prop_assume!(m.coloops() == 0);
        g_polynomial(&engine(), &m).unwrap();
    }
}
