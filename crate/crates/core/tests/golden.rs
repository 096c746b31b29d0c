//! Values checked against closed formulas computed independently here.

mod common;

use common::{binom, engine};
use tautmat::algebra::{int, SparsePoly};
use tautmat::genperm::GenPerm;
use tautmat::invariants::bridge::{cf_check, ehrhart, g_polynomial};
use tautmat::invariants::*;
use tautmat::io::corpus;
use tautmat::io::format::localization_dump;
use tautmat::matroid::Matroid;
use tautmat::taut::KClass;

fn uniform_tutte(r: usize, n: usize) -> SparsePoly {
    let (r, n) = (r as i64, n as i64);
    let mut terms = vec![];
    if r == 0 {
        terms.push((vec![0, n as u32], int(1)));
    } else if r == n {
        terms.push((vec![n as u32, 0], int(1)));
    } else {
        for i in 1..=r {
            terms.push((vec![i as u32, 0], int(binom(n - i - 1, r - i))));
        }
        for j in 1..=n - r {
            terms.push((vec![0, j as u32], int(binom(n - j - 1, n - r - j))));
        }
    }
    SparsePoly::from_terms(&["x", "y"], terms)
}

fn factorial(k: i64) -> i64 {
    (1..=k).product()
}

fn uniform_g(r: i64, n: i64) -> SparsePoly {
    let terms = (1..=r.min(n - r)).map(|i| {
        let c = factorial(n - i - 1) / (factorial(r - i) * factorial(n - r - i) * factorial(i - 1));
        (vec![i as u32], int(c))
    });
    SparsePoly::from_terms(&["s"], terms)
}

/// Lattice points of `c·Δ(r, n)`: integer vectors in `[0, c]^n` summing to `rc`.
fn hypersimplex_points(r: i64, n: usize, c: i64) -> u64 {
    let mut count = 0;
    let mut v = vec![0i64; n];
    loop {
        if v.iter().sum::<i64>() == r * c {
            count += 1;
        }
        let mut i = 0;
        while i < n && v[i] == c {
            v[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
        v[i] += 1;
    }
}

#[test]
fn uniform_tutte_polynomials() {
    for e in corpus::uniforms() {
        let m = &e.matroid;
        assert_eq!(
            tutte_delcontr(m),
            uniform_tutte(m.rank(), m.n1()),
            "{}",
            e.name
        );
    }
}

#[test]
fn uniform_beta_invariants() {
    for e in corpus::uniforms() {
        let (r, n) = (e.matroid.rank() as i64, e.matroid.n1() as i64);
        if n >= 2 {
            assert_eq!(
                beta_pair(&e.matroid).0,
                binom(n - 2, r - 1).into(),
                "{}",
                e.name
            );
        }
    }
    assert_eq!(
        beta_pair(&Matroid::uniform(2, 4).unwrap()),
        (2.into(), 2.into())
    );
}

#[test]
fn uniform_g_polynomials() {
    let e = engine();
    for (r, n) in [(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 5), (3, 6)] {
        let m = Matroid::uniform(r, n).unwrap();
        assert_eq!(
            g_polynomial(&e, &m).unwrap(),
            uniform_g(r as i64, n as i64),
            "U{r},{n}"
        );
    }
    assert_eq!(
        g_polynomial(&e, &Matroid::uniform(1, 2).unwrap())
            .unwrap()
            .to_string(),
        "s"
    );
}

#[test]
fn g_polynomial_rejects_loops_and_coloops() {
    let e = engine();
    for m in [
        Matroid::uniform(0, 3).unwrap(),
        Matroid::uniform(3, 3).unwrap(),
    ] {
        assert!(matches!(
            g_polynomial(&e, &m),
            Err(tautmat::Error::LoopOrColoopPresent)
        ));
    }
}

#[test]
fn hypersimplex_lattice_points() {
    let e = engine();
    for (r, n, c) in [
        (2, 4, 1),
        (2, 4, 2),
        (2, 4, 3),
        (1, 4, 3),
        (3, 6, 2),
        (2, 5, 2),
    ] {
        let p = GenPerm::base_polytope(&Matroid::uniform(r, n).unwrap());
        let want = hypersimplex_points(r as i64, n, c);
        assert_eq!(
            ehrhart(&e, &p, c).unwrap(),
            want.into(),
            "Δ({r},{n}) dilated {c}"
        );
    }
}

#[test]
fn cameron_fink_origin() {
    let r = cf_check(&engine(), &Matroid::uniform(2, 4).unwrap(), 3, 3).unwrap();
    assert_eq!(r.grid[0][0], 6.into());
}

#[test]
fn uniform_bergman_weights_are_all_ones() {
    let e = engine();
    for (r, n) in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)] {
        let w = bergman_weight(&e, &Matroid::uniform(r, n).unwrap()).unwrap();
        let chains = (n - r + 2..=n).product::<usize>();
        assert_eq!(w.weights.len(), chains, "U{r},{n}");
        assert!(w.weights.values().all(|x| *x == 1.into()));
    }
}

#[test]
fn csm_zero_is_signed_beta() {
    let e = engine();
    for entry in corpus::builtin()
        .into_iter()
        .filter(|x| x.matroid.n1() <= 7)
    {
        let m = &entry.matroid;
        if m.rank() == 0 || m.loops() != 0 {
            continue;
        }
        let w = csm_weight(&e, m, 0).unwrap();
        let sign = if (m.rank() - 1) % 2 == 0 { 1 } else { -1 };
        let want = tutte_coranknullity(m).coefficient_of(&[1, 0]).to_integer() * sign;
        let got = w.weights.values().next().cloned().unwrap_or_default();
        assert_eq!(got, want, "{}", entry.name);
    }
}

#[test]
fn vamos_degrees() {
    let v = corpus::by_name("V8").unwrap();
    assert_eq!(v.bases().len(), 65);
    let d = taut_degree_polynomial(&engine(), &v).unwrap();
    assert_eq!(d, t_transform(&v).unwrap());
}

#[test]
fn dump_of_rank_one_on_three_elements() {
    let d = localization_dump(&KClass::s(&Matroid::uniform(1, 3).unwrap())).unwrap();
    let obj = d.as_object().unwrap();
    assert_eq!(obj.len(), 6);
    for (word, terms) in obj {
        let first = (word.as_bytes()[0] - b'0') as usize;
        let mut exp = vec![0i64; 3];
        exp[first] = -1;
        assert_eq!(
            terms,
            &serde_json::json!([{ "exp": exp, "coeff": 1 }]),
            "{word}"
        );
    }
}

#[test]
fn two_element_transforms() {
    let t = t_transform(&Matroid::uniform(1, 2).unwrap()).unwrap();
    assert_eq!(t.to_string(), "x + y + z + w");
}
