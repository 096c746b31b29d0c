// Checking that coefficient arrays are log-concave and unbroken.

use tautmat::algebra::logconcave::logconcave_unbroken_check;
use tautmat::algebra::{Rat, SparsePoly};
use tautmat::engine::Engine;
use tautmat::invariants::{mixed_degree_generating, t_transform};
use tautmat::io::corpus;

pub fn run_example() -> tautmat::Result<usize> {
    let engine = Engine::default();
    let mut checked = 0;
    for e in corpus::named().into_iter().take(3) {
        let t = t_transform(&e.matroid)?;
        let verdict = logconcave_unbroken_check(&t, (e.matroid.n1() - 1) as u32)?;
        println!(
            "{}: {}",
            e.name,
            verdict.map_or("log-concave unbroken".into(), |v| v.to_string())
        );
        checked += 1;
    }
    let (f, nf) = (corpus::by_name("F7")?, corpus::by_name("F7-")?);
    let mixed = mixed_degree_generating(&engine, &[f], &[nf])?;
    let verdict = logconcave_unbroken_check(&mixed, 6)?;
    println!(
        "mixed F7 / F7-: {} terms, {}",
        mixed.len(),
        verdict.map_or("log-concave unbroken".into(), |v| v.to_string())
    );
    checked += 1;

    let vars = ["x", "y"];
    let one = Rat::from_integer(1.into());
    let bad = SparsePoly::from_terms(&vars, [(vec![2, 0], one.clone()), (vec![0, 2], one)]);
    println!(
        "x^2 + y^2: {}",
        logconcave_unbroken_check(&bad, 2)?.expect("internal zero")
    );
    Ok(checked)
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
