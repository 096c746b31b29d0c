// Fixed-point values of tautological classes, and the gluing condition
// along torus-invariant curves.

use tautmat::engine::Engine;
use tautmat::io::format::localization_dump;
use tautmat::matroid::Matroid;
use tautmat::taut::KClass;

pub fn run_example() -> tautmat::Result<serde_json::Value> {
    let m = Matroid::uniform(2, 3)?;
    let s = KClass::s(&m);
    let dump = localization_dump(&s)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&dump).expect("plain data")
    );
    let engine = Engine::default();
    assert!(engine.compat_check_class(&s)?.is_none());
    println!("[S] of U2,3 glues along every invariant curve");
    Ok(dump)
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
