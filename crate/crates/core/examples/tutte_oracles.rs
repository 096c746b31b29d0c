// The Tutte polynomial three ways, plus the convolution identity behind it.

use tautmat::algebra::SparsePoly;
use tautmat::invariants::tutte::{
    tutte_at, tutte_convolution, tutte_coranknullity, tutte_delcontr,
};
use tautmat::io::corpus;

pub fn run_example() -> tautmat::Result<Vec<(String, SparsePoly)>> {
    let mut out = vec![];
    for e in corpus::named().into_iter().take(3) {
        let t = tutte_delcontr(&e.matroid);
        assert_eq!(t, tutte_coranknullity(&e.matroid));
        assert_eq!(t, tutte_convolution(&e.matroid));
        println!("T_{} = {t}", e.name);
        println!(
            "  T(1,1) = {} bases, T(2,2) = {}",
            tutte_at(&t, 1, 1),
            tutte_at(&t, 2, 2)
        );
        out.push((e.name, t));
    }
    Ok(out)
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
