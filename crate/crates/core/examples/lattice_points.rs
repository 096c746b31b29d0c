// Counting lattice points of generalized permutohedra as Euler
// characteristics of line bundles.

use tautmat::algebra::SparsePoly;
use tautmat::engine::Engine;
use tautmat::genperm::GenPerm;
use tautmat::invariants::bridge::{cf_check, ehrhart};
use tautmat::matroid::Matroid;

pub fn run_example() -> tautmat::Result<SparsePoly> {
    let engine = Engine::default();
    let hyper = GenPerm::base_polytope(&Matroid::uniform(2, 4)?);
    for c in 0..4 {
        println!("#(c·Δ(2,4)) at c = {c}: {}", ehrhart(&engine, &hyper, c)?);
    }
    let simplex = GenPerm::delta(4);
    println!("#(3Δ) = {}", ehrhart(&engine, &simplex, 3)?);
    let report = cf_check(&engine, &Matroid::uniform(2, 4)?, 3, 3)?;
    println!("Q(t, u) = {}", report.q);
    println!("Ψ(Q) = {}", report.psi);
    Ok(report.q)
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
