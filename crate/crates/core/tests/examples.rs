//! Runs every example under `examples/` so they stay in step with the library.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }
    };
}

example!(matroids);
example!(tautological_degrees);
example!(tutte_oracles);
example!(minkowski_weights);
example!(euler_characteristics);
example!(lattice_points);
example!(g_polynomial);
example!(flag_matroids);
example!(log_concavity);
example!(localization_dump);
example!(valuativity);
example!(cli_report);

#[test]
fn matroids_example() {
    let s = matroids::run_example().unwrap();
    let got: Vec<_> = s
        .iter()
        .map(|x| (x.name.as_str(), x.rank, x.bases, x.flats))
        .collect();
    assert_eq!(got[0], ("M(K4)", 3, 16, 15));
    assert_eq!(got[2], ("F7", 3, 28, 16));
}

#[test]
fn tautological_degrees_example() {
    let t = tautological_degrees::run_example().unwrap();
    assert_eq!(t.total_degree(), Some(5));
}

#[test]
fn tutte_oracles_example() {
    let ts = tutte_oracles::run_example().unwrap();
    assert_eq!(
        ts[0].1.to_string(),
        "x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y"
    );
}

#[test]
fn minkowski_weights_example() {
    let ws = minkowski_weights::run_example().unwrap();
    assert_eq!(ws.len(), 3);
    assert_eq!(ws[2].weights.len(), 20);
}

#[test]
fn euler_characteristics_example() {
    let chis = euler_characteristics::run_example().unwrap();
    let got: Vec<String> = chis.iter().map(|c| c.to_string()).collect();
    assert_eq!(got, ["1", "0", "4", "0", "0"]);
}

#[test]
fn lattice_points_example() {
    let q = lattice_points::run_example().unwrap();
    assert_eq!(q.coefficient_of(&[0, 0]).to_string(), "6");
}

#[test]
fn g_polynomial_example() {
    let gs = g_polynomial::run_example().unwrap();
    assert_eq!(gs[1].1.to_string(), "s^2 + 2*s");
    assert_eq!(gs[2].1.to_string(), "2*s^2 + 3*s");
}

#[test]
fn flag_matroids_example() {
    let kt = flag_matroids::run_example().unwrap();
    assert!(!kt.is_zero());
}

#[test]
fn log_concavity_example() {
    assert_eq!(log_concavity::run_example().unwrap(), 4);
}

#[test]
fn localization_dump_example() {
    let dump = localization_dump::run_example().unwrap();
    assert_eq!(dump.as_object().unwrap().len(), 6);
}

#[test]
fn valuativity_example() {
    let r = valuativity::run_example().unwrap();
    assert_eq!(r.beta, [(2, 2), (1, 1), (1, 1), (0, 0)]);
}

#[test]
fn cli_report_example() {
    let json = cli_report::run_example().unwrap();
    assert!(json.contains("\"command\""));
}
