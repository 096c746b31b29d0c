//! A worked valuativity check on the smallest nontrivial subdivision: the
//! hypersimplex `Δ(2,4)` cut along `x_0 + x_1 = 1` into two pieces sharing
//! an octahedral face.

use super::degrees::taut_degree_polynomial;
use super::tutte::beta_pair;
use super::weights::{bergman_weight, MinkowskiWeight};
use crate::algebra::SparsePoly;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::genperm::GenPerm;
use crate::matroid::Matroid;

/// The three pieces of the subdivision together with the whole.
pub struct Subdivision {
    pub whole: Matroid,
    pub first: Matroid,
    pub second: Matroid,
    pub shared: Matroid,
}

pub fn split_u24() -> Result<Subdivision> {
    let pairs = |skip: [usize; 2]| -> Vec<Vec<usize>> {
        let mut v = vec![];
        for a in 0..4 {
            for b in a + 1..4 {
                if [a, b] != skip {
                    v.push(vec![a, b]);
                }
            }
        }
        v
    };
    Ok(Subdivision {
        whole: Matroid::uniform(2, 4)?,
        first: Matroid::from_basis_lists(4, &pairs([0, 1]))?,
        second: Matroid::from_basis_lists(4, &pairs([2, 3]))?,
        shared: Matroid::from_basis_lists(4, &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]])?,
    })
}

#[derive(Clone, Debug)]
pub struct ValuativityReport {
    pub grid_points: usize,
    pub taut_degrees: [SparsePoly; 4],
    pub beta: [(i64, i64); 4],
}

fn indicator_grid(s: &Subdivision, k: i64) -> Result<usize> {
    let dil = |m: &Matroid| GenPerm::base_polytope(m).dilate(k);
    let polys = [
        dil(&s.whole)?,
        dil(&s.first)?,
        dil(&s.second)?,
        dil(&s.shared)?,
    ];
    let side = (3 * k + 1) as usize;
    let mut checked = 0;
    for idx in 0..side.pow(4) {
        let mut p = [0i64; 4];
        let mut r = idx;
        for c in p.iter_mut() {
            *c = (r % side) as i64 - k;
            r /= side;
        }
        let ind: Vec<i64> = polys.iter().map(|q| q.contains(&p) as i64).collect();
        if ind[0] != ind[1] + ind[2] - ind[3] {
            let at: Vec<String> = p.iter().map(|c| format!("{c}/{k}")).collect();
            return Err(Error::IndicatorIdentityFails(format!(
                "({})",
                at.join(", ")
            )));
        }
        checked += 1;
    }
    Ok(checked)
}

/// Checks `1_{P(U_{2,4})} = 1_{P(M_1)} + 1_{P(M_2)} - 1_{P(M_12)}` on the
/// grid `[-1, 2]^4` with step `1/k`, then the same relation for the
/// tautological degree polynomial, the Bergman weight and the beta pair.
pub fn valuativity_demo(engine: &Engine, k: i64) -> Result<ValuativityReport> {
    if k < 1 {
        return Err(Error::InvalidArgument(
            "grid step denominator must be positive".into(),
        ));
    }
    let s = split_u24()?;
    let grid_points = indicator_grid(&s, k)?;
    let mats = [&s.whole, &s.first, &s.second, &s.shared];

    let t: Vec<SparsePoly> = mats
        .iter()
        .map(|m| taut_degree_polynomial(engine, m))
        .collect::<Result<_>>()?;
    if t[0] != &(&t[1] + &t[2]) - &t[3] {
        return Err(Error::ValuativityFails(
            "the tautological degree polynomial".into(),
        ));
    }

    let w: Vec<MinkowskiWeight> = mats
        .iter()
        .map(|m| bergman_weight(engine, m))
        .collect::<Result<_>>()?;
    let rhs = MinkowskiWeight::combine(&[(1, &w[1]), (1, &w[2]), (-1, &w[3])])?;
    if w[0] != rhs {
        return Err(Error::ValuativityFails("the Bergman weight".into()));
    }

    let b: Vec<(i64, i64)> = mats
        .iter()
        .map(|m| {
            let (x, y) = beta_pair(m);
            (
                i64::try_from(x).unwrap_or(i64::MAX),
                i64::try_from(y).unwrap_or(i64::MAX),
            )
        })
        .collect();
    if b[0].0 != b[1].0 + b[2].0 - b[3].0 || b[0].1 != b[1].1 + b[2].1 - b[3].1 {
        return Err(Error::ValuativityFails("the beta invariant".into()));
    }

    Ok(ValuativityReport {
        grid_points,
        taut_degrees: [t[0].clone(), t[1].clone(), t[2].clone(), t[3].clone()],
        beta: [b[0], b[1], b[2], b[3]],
    })
}
