mod common;

use common::{arb_matroid, engine};
use proptest::prelude::*;
use tautmat::algebra::SparsePoly;
use tautmat::engine::{Engine, GradedProblem};
use tautmat::genperm::GenPerm;
use tautmat::invariants::bridge::simple_chern_check;
use tautmat::invariants::taut_degree_polynomial;
use tautmat::matroid::{Matroid, Perm};
use tautmat::taut::{ChernFactor, KClass};

fn degree_problem(m: &Matroid) -> GradedProblem {
    let vars = ["x", "y", "z", "w"];
    let f = vec![
        ChernFactor::alpha("x"),
        ChernFactor::beta("y"),
        ChernFactor::chern(KClass::s(m).dual(), "z"),
        ChernFactor::chern(KClass::q(m), "w"),
    ];
    GradedProblem::new(m.n1(), &vars, f).unwrap()
}

fn some_classes(m: &Matroid) -> Vec<KClass> {
    let (s, q) = (KClass::s(m), KClass::q(m));
    let mut v = vec![s.clone(), q.clone(), s.dual(), q.dual(), s.det().dual()];
    for k in 0..=m.rank() {
        v.push(s.wedge(k));
    }
    v.push(KClass::product(&[&s.dual().det(), &q.dual().wedge(1)]).unwrap());
    v.push(KClass::line(&GenPerm::base_polytope(m).dilate(2).unwrap()));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn worker_count_and_seed_do_not_matter(m in arb_matroid(2, 6)) {
        let p = degree_problem(&m);
        let a = Engine::new(1, 1).integrate_graded(&p).unwrap();
        let b = Engine::new(1, 2).integrate_graded(&p).unwrap();
        let c = Engine::new(99, 8).integrate_graded(&p).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
    }

    #[test]
    fn blockwise_sums_agree(m in arb_matroid(2, 4), parts in 1usize..9) {
        let e = engine();
        let p = degree_problem(&m);
        let whole = e.integrate_graded(&p).unwrap();
        let contrib = e.graded_contributions(&p).unwrap();
        let chunk = contrib.len().div_ceil(parts);
        let mut total = SparsePoly::zero(&["x", "y", "z", "w"]);
        for block in contrib.chunks(chunk) {
            let s = block.iter().fold(SparsePoly::zero(&["x", "y", "z", "w"]), |a, (_, c)| &a + c);
            total = &total + &s;
        }
        prop_assert_eq!(total, whole);
    }

    #[test]
    fn fast_path_matches_rational_reference(m in arb_matroid(2, 6)) {
        let p = degree_problem(&m);
        let fast = engine().integrate_graded(&p).unwrap();
        let exact = engine().exact_only(true).integrate_graded(&p).unwrap();
        prop_assert_eq!(fast, exact);
    }

    #[test]
    fn euler_characteristic_routes_agree(m in arb_matroid(1, 4)) {
        let e = engine();
        for c in some_classes(&m) {
            prop_assert_eq!(e.euler_char_ab(&c).unwrap(), e.chi_zeta(&c).unwrap());
        }
    }

    #[test]
    fn classes_glue_across_curves(m in arb_matroid(2, 5)) {
        let e = engine();
        for c in some_classes(&m) {
            prop_assert_eq!(e.compat_check_class(&c).unwrap(), None);
        }
        prop_assert_eq!(e.compat_check_chern(&KClass::q(&m)).unwrap(), None);
    }

    #[test]
    fn s_plus_q_is_trivial_and_cremona_dualizes(m in arb_matroid(1, 5)) {
        let n1 = m.n1();
        let sum = KClass::sum(&[&KClass::s(&m), &KClass::q(&m)]).unwrap();
        let triv = KClass::trivial(n1);
        let d = m.dual();
        for sigma in Perm::all(n1) {
            prop_assert_eq!(sum.at(&sigma).unwrap(), triv.at(&sigma).unwrap());
            prop_assert_eq!(KClass::s(&m).crem().at(&sigma).unwrap(), KClass::q(&d).dual().at(&sigma).unwrap());
            prop_assert_eq!(KClass::q(&m).crem().at(&sigma).unwrap(), KClass::s(&d).dual().at(&sigma).unwrap());
        }
    }

    #[test]
    fn simple_chern_identities(m in arb_matroid(2, 5)) {
        prop_assert_eq!(simple_chern_check(&engine(), &m).unwrap(), None);
    }
}

#[test]
fn self_checks_are_counted() {
    let e = engine();
    let before = e.stats();
    taut_degree_polynomial(&e, &Matroid::uniform(2, 5).unwrap()).unwrap();
    let after = e.stats();
    assert_eq!(after.graded_runs, before.graded_runs + 1);
    assert_eq!(after.two_point_agreements, before.two_point_agreements + 1);
    assert!(after.subdegree_coefficients_checked > before.subdegree_coefficients_checked);
}

#[test]
fn guardrail_rejects_large_ground_sets() {
    let e = Engine::new(1, 1).with_max_ground(5);
    let err = taut_degree_polynomial(&e, &Matroid::uniform(2, 6).unwrap()).unwrap_err();
    assert!(matches!(
        err,
        tautmat::Error::GuardrailExceeded { size: 6, limit: 5 }
    ));
}
