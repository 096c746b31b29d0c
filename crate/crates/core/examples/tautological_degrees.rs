// Degrees of products of tautological Chern classes, compared with the
// four-variable transform of the Tutte polynomial.

use tautmat::algebra::SparsePoly;
use tautmat::engine::Engine;
use tautmat::invariants::{beta_from_degrees, t_transform, taut_degree_polynomial};
use tautmat::io::corpus;

pub fn run_example() -> tautmat::Result<SparsePoly> {
    let engine = Engine::default();
    let m = corpus::by_name("M(K4)")?;
    let degrees = taut_degree_polynomial(&engine, &m)?;
    let transform = t_transform(&m)?;
    assert_eq!(degrees, transform);
    let (beta, beta_dual) = beta_from_degrees(&degrees, &m);
    println!("t_M(K4) = {degrees}");
    println!("beta = {beta}, beta of the dual = {beta_dual}");
    println!("engine self-checks: {:?}", engine.stats());
    Ok(degrees)
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
