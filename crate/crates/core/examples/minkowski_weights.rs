// Bergman and CSM classes as Minkowski weights on chains of subsets.

use tautmat::engine::Engine;
use tautmat::invariants::weights::{csm_weight_with, mw_balance_check, MinorIntegrals};
use tautmat::invariants::{bergman_weight, MinkowskiWeight};
use tautmat::matroid::Matroid;

pub fn run_example() -> tautmat::Result<Vec<MinkowskiWeight>> {
    let engine = Engine::default();
    let m = Matroid::uniform(3, 5)?;
    let mut ints = MinorIntegrals::new(&engine);
    let mut out = vec![];
    for k in 0..m.rank() {
        let w = csm_weight_with(&mut ints, &m, k)?;
        assert!(mw_balance_check(&w).is_none());
        let total: i64 = w
            .weights
            .values()
            .map(|x| i64::try_from(x).unwrap_or(0))
            .sum();
        println!(
            "csm_{k}(U3,5): {} cones, weights sum to {total}",
            w.weights.len()
        );
        out.push(w);
    }
    let b = bergman_weight(&engine, &m)?;
    assert_eq!(&b, out.last().expect("rank is positive"));
    println!(
        "Bergman class of U3,5 has {} cones of weight 1",
        b.weights.len()
    );
    Ok(out)
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
