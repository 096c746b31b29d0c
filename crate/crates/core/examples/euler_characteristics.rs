// K-theoretic Euler characteristics, by localization and through the
// zeta map, and the Tutte polynomial they assemble into.

use tautmat::algebra::Int;
use tautmat::engine::Engine;
use tautmat::invariants::bridge::{euler_chars, fs_tutte};
use tautmat::matroid::Matroid;
use tautmat::taut::KClass;

pub fn run_example() -> tautmat::Result<Vec<Int>> {
    let engine = Engine::default();
    let m = Matroid::uniform(2, 4)?;
    let s = KClass::s(&m);
    let classes = vec![
        KClass::one(4),
        s.clone(),
        s.dual(),
        s.wedge(2),
        KClass::q(&m).dual().det(),
    ];
    let chis = euler_chars(&engine, &classes)?;
    for (name, chi) in ["O", "S", "S^∨", "∧²S", "det Q^∨"].iter().zip(&chis) {
        println!("χ({name}) = {chi}");
    }
    println!(
        "both routes agreed {} times",
        engine.stats().chi_route_agreements
    );
    println!(
        "Tutte polynomial from Euler characteristics: {}",
        fs_tutte(&engine, &m)?
    );
    Ok(chis)
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
