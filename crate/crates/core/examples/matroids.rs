// Building matroids, taking minors and duals, and reading off structure.

use tautmat::io::corpus;
use tautmat::matroid::{subset, Matroid, Perm};

pub struct Summary {
    pub name: String,
    pub rank: usize,
    pub bases: usize,
    pub flats: usize,
}

pub fn run_example() -> tautmat::Result<Vec<Summary>> {
    let k4 = Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    let fano = corpus::by_name("F7")?;
    let minor = fano.minor(subset::from_elems(&[0, 1, 2, 3, 4]), subset::singleton(0))?;

    let sigma = Perm::new(vec![3, 1, 0, 2, 4, 5])?;
    println!(
        "lex-first basis of M(K4) under {}: {:?}",
        sigma.word(),
        subset::elems(k4.lex_first_basis(&sigma))
    );

    let mut out = vec![];
    for (name, m) in [
        ("M(K4)", k4.clone()),
        ("M(K4)*", k4.dual()),
        ("F7", fano),
        ("F7|01234/0", minor),
    ] {
        println!(
            "{name}: |E| = {}, rank {}, {} bases, {} flats, components {:?}",
            m.n1(),
            m.rank(),
            m.bases().len(),
            m.flats().len(),
            m.connected_components()
                .into_iter()
                .map(subset::elems)
                .collect::<Vec<_>>()
        );
        out.push(Summary {
            name: name.into(),
            rank: m.rank(),
            bases: m.bases().len(),
            flats: m.flats().len(),
        });
    }
    Ok(out)
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
