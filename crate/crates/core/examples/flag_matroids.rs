// Tutte polynomials of flag matroids and of matroid quotients.

use tautmat::algebra::SparsePoly;
use tautmat::engine::Engine;
use tautmat::invariants::flag::{flag_kchi, flag_tutte_kt, lvt};
use tautmat::matroid::{FlagMatroid, Matroid};

pub fn run_example() -> tautmat::Result<SparsePoly> {
    let engine = Engine::default();
    let m = Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    let f = FlagMatroid::new(vec![Matroid::uniform(1, 6)?, m.clone()])?;
    let kt = flag_tutte_kt(&engine, &f)?;
    println!("KT(U1,6 ⊂ M(K4)) = {kt}");
    println!("Kχ = {}", flag_kchi(&engine, &f)?);
    let top = m.higgs_lift().constituents()[m.rank() - 1].clone();
    let l = lvt(&engine, &top, &m)?;
    println!("Las Vergnas Tutte of the truncation of M(K4) into M(K4): {l}");
    match lvt(&engine, &m, &Matroid::uniform(3, 6)?) {
        Err(e) => println!("M(K4) over U3,6: {e}"),
        Ok(p) => println!("M(K4) over U3,6: {p}"),
    }
    Ok(kt)
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
