// Speyer's g-polynomial from tautological classes.

use tautmat::algebra::SparsePoly;
use tautmat::engine::Engine;
use tautmat::invariants::g_polynomial;
use tautmat::io::corpus;

pub fn run_example() -> tautmat::Result<Vec<(String, SparsePoly)>> {
    let engine = Engine::default();
    let mut out = vec![];
    for name in ["U1,2", "U2,4", "U2,5", "U3,6", "M(K4)"] {
        let g = g_polynomial(&engine, &corpus::by_name(name)?)?;
        println!("g_{name}(s) = {g}");
        out.push((name.to_string(), g));
    }
    match g_polynomial(&engine, &corpus::by_name("U2,2")?) {
        Err(e) => println!("U2,2: {e}"),
        Ok(g) => println!("U2,2 unexpectedly gave {g}"),
    }
    Ok(out)
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
