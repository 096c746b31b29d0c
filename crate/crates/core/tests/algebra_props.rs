use proptest::prelude::*;
use tautmat::algebra::interp::interpolate_univariate;
use tautmat::algebra::psi::{psi_inverse, psi_transform};
use tautmat::algebra::{int, rat, Rat, SparsePoly};
use tautmat::io::format::{poly_from_value, poly_to_value};
use tautmat::Error;

const TU: [&str; 2] = ["t", "u"];

fn arb_poly(vars: &'static [&'static str], max_deg: u32) -> impl Strategy<Value = SparsePoly> {
    let n = vars.len();
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, n), -20i64..=20, 1i64..=4),
        0..8,
    )
    .prop_map(move |terms| {
        let t = terms
            .into_iter()
            .filter(|(e, _, _)| e.iter().sum::<u32>() <= max_deg)
            .map(|(e, a, b)| (e, rat(a, b)));
        SparsePoly::from_terms(vars, t)
    })
}

/// `Δ_t^i Δ_u^j P(0, 0)` computed from values on the grid.
fn forward_difference(p: &SparsePoly, i: usize, j: usize) -> Rat {
    let binom = |n: usize, k: usize| (0..k).fold(1i64, |a, m| a * (n - m) as i64 / (m + 1) as i64);
    let mut acc = int(0);
    for a in 0..=i {
        for b in 0..=j {
            let sign = if (i - a + j - b).is_multiple_of(2) {
                1
            } else {
                -1
            };
            let v = p.evaluate(&[int(a as i64), int(b as i64)]).unwrap();
            acc += v * int(sign * binom(i, a) * binom(j, b));
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn psi_is_invertible(p in arb_poly(&TU, 6)) {
        let back = psi_inverse(&psi_transform(&p, &["x", "y"]), &TU);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn psi_coefficients_are_forward_differences(p in arb_poly(&TU, 4)) {
        let q = psi_transform(&p, &["x", "y"]);
        for i in 0..=4u32 {
            for j in 0..=4u32 {
                prop_assert_eq!(q.coefficient_of(&[i, j]), forward_difference(&p, i as usize, j as usize));
            }
        }
    }

    #[test]
    fn interpolation_reproduces(p in arb_poly(&["q"], 7), extra in 0usize..4) {
        let d = 7;
        let samples: Vec<(Rat, Rat)> = (0..(d + 1 + extra) as i64)
            .map(|q| (int(3 * q - 5), p.evaluate(&[int(3 * q - 5)]).unwrap()))
            .collect();
        prop_assert_eq!(interpolate_univariate(&samples, d, "q").unwrap(), p);
    }

    #[test]
    fn ring_laws(a in arb_poly(&["x", "y"], 3), b in arb_poly(&["x", "y"], 3), c in arb_poly(&["x", "y"], 3)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &a), &SparsePoly::zero(&["x", "y"]));
    }

    #[test]
    fn json_round_trip(p in arb_poly(&["x", "y", "z", "w"], 5)) {
        prop_assert_eq!(poly_from_value(poly_to_value(&p), "t").unwrap(), p);
    }
}

#[test]
fn small_identities() {
    let v = ["x", "y"];
    let (x, y) = (SparsePoly::var(&v, "x"), SparsePoly::var(&v, "y"));
    assert_eq!((&(&x + &y) * &(&x - &y)).to_string(), "x^2 - y^2");
    let p = &(&x * &x) + &SparsePoly::one(&v);
    assert_eq!(p.evaluate(&[rat(3, 2), int(0)]).unwrap(), rat(13, 4));
    assert_eq!(p.truncate_total_degree(1).to_string(), "1");
    let q = ["q"];
    let t = SparsePoly::var(&q, "q");
    let s = &(&SparsePoly::one(&q) + &t) + &(&t * &t);
    assert_eq!(s.truncate_total_degree(1).to_string(), "q + 1");
}

#[test]
fn too_low_degree_bound_is_detected() {
    let samples: Vec<(Rat, Rat)> = (0..5).map(|q: i64| (int(q), int(q * q * q))).collect();
    assert!(matches!(
        interpolate_univariate(&samples, 2, "q"),
        Err(Error::InconsistentSamples(_))
    ));
    let sq: Vec<(Rat, Rat)> = (0..3).map(|q: i64| (int(q), int(q * q))).collect();
    assert_eq!(
        interpolate_univariate(&sq, 2, "q").unwrap().to_string(),
        "q^2"
    );
}

#[test]
fn rendering() {
    let v = ["x", "y", "z", "w"];
    let s = v
        .iter()
        .map(|n| SparsePoly::var(&v, n))
        .fold(SparsePoly::zero(&v), |a, b| &a + &b);
    assert_eq!(s.to_string(), "x + y + z + w");
}
