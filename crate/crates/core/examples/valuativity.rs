// Inclusion-exclusion across a subdivision of the hypersimplex Δ(2,4).

use tautmat::engine::Engine;
use tautmat::invariants::valuative::{valuativity_demo, ValuativityReport};

pub fn run_example() -> tautmat::Result<ValuativityReport> {
    let r = valuativity_demo(&Engine::default(), 3)?;
    println!(
        "indicator identity checked at {} grid points",
        r.grid_points
    );
    for (name, b) in ["U2,4", "first piece", "second piece", "shared face"]
        .iter()
        .zip(r.beta)
    {
        println!("{name}: beta pair {b:?}");
    }
    Ok(r)
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
