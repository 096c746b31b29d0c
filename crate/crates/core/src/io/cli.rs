//! The `tautmat` command line.

use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use super::corpus::{self, Entry};
use super::format::{
    flag_to_value, genperm_from_value, genperm_to_value, matroid_from_value, matroid_to_value,
    parse_flag_str,
};
use super::report::{Item, Report};
use crate::algebra::logconcave::logconcave_unbroken_check;
use crate::algebra::{Int, SparsePoly};
use crate::engine::{Engine, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::genperm::GenPerm;
use crate::invariants::bridge::{cf_check, chi_structure_sheaf, ehrhart, fs_tutte, g_polynomial};
use crate::invariants::flag::{flag_kchi, flag_tutte_kt, higgs_chern_roots_check, lvt};
use crate::invariants::transform::{coalgebra_recursion_check, swap_dual, t_transform};
use crate::invariants::tutte::{
    beta_pair, tutte_at, tutte_convolution, tutte_coranknullity, tutte_delcontr,
};
use crate::invariants::valuative::valuativity_demo;
use crate::invariants::weights::{
    bergman_weight, csm_weight_with, mw_balance_check, MinorIntegrals,
};
use crate::invariants::{beta_from_degrees, taut_degree_polynomial};
use crate::matroid::{subset, FlagMatroid, Matroid};

/// Ground sets up to this size also get the Euler-characteristic route
/// comparison in `check`.
const CHI_CHECK_LIMIT: usize = 5;

#[derive(Parser, Debug)]
#[command(
    name = "tautmat",
    version,
    about = "Tautological classes of matroids by localization"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    /// Seed for generic-point sampling.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads for localization sums.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest ground set accepted (default 9, or TAUTMAT_GUARDRAIL).
    #[arg(long, global = true)]
    pub max_ground: Option<usize>,
    /// Append wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CorpusChoice {
    Builtin,
    Uniform,
    Named,
}

/// Inputs are JSON files or the shorthands `uniform:r:n`,
/// `hypersimplex:r:n`, `graphic:@file` and `corpus:NAME`.
#[derive(Subcommand, Debug, Clone)]
pub enum Verb {
    /// Basic structure of a matroid.
    Info { input: String },
    /// Tutte polynomial by three methods.
    Tutte { input: String },
    /// Generating polynomial of the tautological degrees.
    Tautdeg { input: String },
    /// Beta invariants of the matroid and its dual.
    Beta { input: String },
    /// Bergman class as a Minkowski weight.
    Bergman { input: String },
    /// CSM classes as Minkowski weights.
    Csm {
        input: String,
        /// Only this dimension; all by default.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Speyer's g-polynomial.
    Gpoly { input: String },
    /// Tutte polynomial from Euler characteristics.
    Fstutte { input: String },
    /// Lattice-point counts of `P(M) + t∇ + uΔ`.
    Cf {
        input: String,
        #[arg(long)]
        t_range: Option<usize>,
        #[arg(long)]
        u_range: Option<usize>,
    },
    /// Lattice points of a dilated generalized permutohedron.
    Ehrhart {
        input: String,
        #[arg(long, default_value_t = 1)]
        c: i64,
    },
    /// Flag-geometric Tutte polynomial of a flag matroid.
    FlagTutte {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Las Vergnas Tutte polynomial of a quotient.
    Lvt { first: String, second: String },
    /// Runs the cross-validation ledger.
    Check {
        inputs: Vec<String>,
        #[arg(long, value_enum)]
        corpus: Option<CorpusChoice>,
    },
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
}

fn read_json(path: &str) -> Result<Value> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::ParseError {
        at: format!("{path}:{}:{}", e.line(), e.column()),
        msg: e.to_string(),
    })
}

fn shorthand_rn(rest: &str, input: &str) -> Result<(usize, usize)> {
    let bad = || Error::ParseError {
        at: input.into(),
        msg: "expected two integers r:n".into(),
    };
    let (r, n) = rest.split_once(':').ok_or_else(bad)?;
    Ok((r.parse().map_err(|_| bad())?, n.parse().map_err(|_| bad())?))
}

/// Resolves a matroid input. `hypersimplex:r:n` names `U_{r,n}`.
pub fn resolve_matroid(input: &str) -> Result<Matroid> {
    if let Some(rest) = input
        .strip_prefix("uniform:")
        .or_else(|| input.strip_prefix("hypersimplex:"))
    {
        let (r, n) = shorthand_rn(rest, input)?;
        return Matroid::uniform(r, n);
    }
    if let Some(name) = input.strip_prefix("corpus:") {
        return corpus::by_name(name);
    }
    if let Some(path) = input.strip_prefix("graphic:@") {
        let mut v = read_json(path)?;
        if let Value::Object(o) = &mut v {
            o.entry("type").or_insert_with(|| Value::from("graphic"));
        }
        return matroid_from_value(v, path);
    }
    matroid_from_value(read_json(input)?, input)
}

/// Resolves a polytope input; a matroid input stands for its base polytope.
pub fn resolve_genperm(input: &str) -> Result<GenPerm> {
    let file = !input.contains(':') || Path::new(input).exists();
    if file {
        let v = read_json(input)?;
        let symbolic = v.get("rk").is_some()
            || v.get("type")
                .is_some_and(|t| t == "base_polytope" || t == "hypersimplex");
        if symbolic {
            return genperm_from_value(v, input);
        }
        return Ok(GenPerm::base_polytope(&matroid_from_value(v, input)?));
    }
    Ok(GenPerm::base_polytope(&resolve_matroid(input)?))
}

/// One input naming a flag file, or one matroid per constituent.
pub fn resolve_flag(inputs: &[String]) -> Result<FlagMatroid> {
    if let [one] = inputs {
        if Path::new(one).exists() {
            if let Ok(Value::Array(_)) = read_json(one) {
                return parse_flag_str(&read(one)?, one);
            }
        }
    }
    let mats = inputs
        .iter()
        .map(|s| resolve_matroid(s))
        .collect::<Result<Vec<_>>>()?;
    FlagMatroid::new(mats).map_err(|e| Error::ValidationError(e.to_string()))
}

fn canonical(m: &Matroid) -> String {
    matroid_to_value(m).to_string()
}

fn poly_check(a: &SparsePoly, b: &SparsePoly, what: &str) -> Option<String> {
    (a != b).then(|| format!("{what}: {a} vs {b}"))
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Report> {
    let mut engine = Engine::new(cli.seed, cli.jobs);
    if let Some(g) = cli.max_ground {
        engine = engine.with_max_ground(g);
    }
    let start = Instant::now();
    let mut report = run_verb(&engine, &cli.verb, cli.seed)?;
    report.stats = engine.stats();
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

fn single(verb: &str, input: &str, extra: &[String], seed: u64) -> Result<(Matroid, Report)> {
    let m = resolve_matroid(input)?;
    let mut cmd = vec![verb.to_string(), input.to_string()];
    cmd.extend_from_slice(extra);
    Ok((m.clone(), Report::new(cmd, seed, &[canonical(&m)])))
}

fn run_verb(engine: &Engine, verb: &Verb, seed: u64) -> Result<Report> {
    match verb {
        Verb::Info { input } => {
            let (m, mut rep) = single("info", input, &[], seed)?;
            rep.push("ground_set", Item::Int(m.n1().into()));
            rep.push("rank", Item::Int(m.rank().into()));
            rep.push("bases", Item::Int(m.bases().len().into()));
            rep.push(
                "loops",
                Item::Text(format!("{:?}", subset::elems(m.loops()))),
            );
            rep.push(
                "coloops",
                Item::Text(format!("{:?}", subset::elems(m.coloops()))),
            );
            let comps: Vec<Vec<usize>> = m
                .connected_components()
                .into_iter()
                .map(subset::elems)
                .collect();
            rep.push("components", Item::Text(format!("{comps:?}")));
            rep.push("flats", Item::Int(m.flats().len().into()));
            let dim = m.base_polytope_dim();
            let want = m.n1() - comps.len();
            rep.check(
                "polytope dimension is n + 1 - components",
                input,
                Ok((dim != want).then(|| format!("dimension {dim}, expected {want}"))),
            );
            Ok(rep)
        }
        Verb::Tutte { input } => {
            let (m, mut rep) = single("tutte", input, &[], seed)?;
            let t = tutte_delcontr(&m);
            check_triple_tutte(&mut rep, &m, input, &t);
            rep.push("tutte", Item::Poly(t));
            Ok(rep)
        }
        Verb::Tautdeg { input } => {
            let (m, mut rep) = single("tautdeg", input, &[], seed)?;
            let t = taut_degree_polynomial(engine, &m)?;
            let tt = t_transform(&m);
            rep.check(
                "degrees equal the Tutte transform",
                input,
                tt.map(|tt| poly_check(&t, &tt, "degrees vs transform")),
            );
            rep.push("t", Item::Poly(t));
            Ok(rep)
        }
        Verb::Beta { input } => {
            let (m, mut rep) = single("beta", input, &[], seed)?;
            let t = taut_degree_polynomial(engine, &m)?;
            let from_deg = beta_from_degrees(&t, &m);
            let from_tutte = beta_pair(&m);
            rep.check(
                "beta from degrees equals beta from Tutte",
                input,
                Ok((from_deg != from_tutte).then(|| format!("{from_deg:?} vs {from_tutte:?}"))),
            );
            rep.push("beta", Item::Int(from_deg.0));
            rep.push("beta_dual", Item::Int(from_deg.1));
            Ok(rep)
        }
        Verb::Bergman { input } => {
            let (m, mut rep) = single("bergman", input, &[], seed)?;
            let w = bergman_weight(engine, &m)?;
            rep.check("Bergman routes agree", input, Ok(None));
            rep.check(
                "balancing",
                input,
                Ok(mw_balance_check(&w).map(|c| format!("fails at {:?}", c.to_lists()))),
            );
            rep.push("bergman", Item::Weight(w));
            Ok(rep)
        }
        Verb::Csm { input, k } => {
            let extra: Vec<String> = k.iter().map(|k| format!("--k={k}")).collect();
            let (m, mut rep) = single("csm", input, &extra, seed)?;
            if m.rank() == 0 {
                return Err(Error::InvalidArgument(
                    "CSM classes need rank at least 1".into(),
                ));
            }
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (0..m.rank()).collect(),
            };
            let mut ints = MinorIntegrals::new(engine);
            for k in ks {
                let w = csm_weight_with(&mut ints, &m, k)?;
                rep.check(&format!("csm_{k} routes agree"), input, Ok(None));
                rep.check(
                    &format!("csm_{k} balancing"),
                    input,
                    Ok(mw_balance_check(&w).map(|c| format!("fails at {:?}", c.to_lists()))),
                );
                rep.push(format!("csm_{k}"), Item::Weight(w));
            }
            Ok(rep)
        }
        Verb::Gpoly { input } => {
            let (m, mut rep) = single("gpoly", input, &[], seed)?;
            let g = g_polynomial(engine, &m)?;
            rep.check("g-polynomial routes agree", input, Ok(None));
            rep.push("g", Item::Poly(g));
            Ok(rep)
        }
        Verb::Fstutte { input } => {
            let (m, mut rep) = single("fstutte", input, &[], seed)?;
            let t = fs_tutte(engine, &m)?;
            rep.check(
                "Euler characteristics give the Tutte polynomial",
                input,
                Ok(None),
            );
            rep.push("tutte", Item::Poly(t));
            Ok(rep)
        }
        Verb::Cf {
            input,
            t_range,
            u_range,
        } => {
            let m0 = resolve_matroid(input)?;
            let n = m0.n1() - 1;
            let (tr, ur) = (t_range.unwrap_or(n), u_range.unwrap_or(n));
            let (m, mut rep) = single(
                "cf",
                input,
                &[format!("--t-range={tr}"), format!("--u-range={ur}")],
                seed,
            )?;
            let r = cf_check(engine, &m, tr, ur)?;
            rep.check(
                "lattice counts equal Euler characteristics",
                input,
                Ok(None),
            );
            rep.check(
                "binomial transform equals the Tutte specialization",
                input,
                Ok(None),
            );
            rep.push("grid", Item::Grid(r.grid));
            rep.push("q", Item::Poly(r.q));
            rep.push("psi", Item::Poly(r.psi));
            Ok(rep)
        }
        Verb::Ehrhart { input, c } => {
            let p = resolve_genperm(input)?;
            let mut rep = Report::new(
                vec!["ehrhart".into(), input.clone(), format!("--c={c}")],
                seed,
                &[genperm_to_value(&p).to_string()],
            );
            let v = ehrhart(engine, &p, *c)?;
            rep.check("lattice count equals Euler characteristic", input, Ok(None));
            rep.push("lattice_points", Item::Int(v));
            Ok(rep)
        }
        Verb::FlagTutte { inputs } => {
            let f = resolve_flag(inputs)?;
            let mut cmd = vec!["flag-tutte".to_string()];
            cmd.extend(inputs.iter().cloned());
            let mut rep = Report::new(cmd, seed, &[flag_to_value(&f).to_string()]);
            let subject = inputs.join(" ");
            let kt = flag_tutte_kt(engine, &f)?;
            let kchi = flag_kchi(engine, &f);
            rep.check(
                "Kχ coefficients alternate",
                &subject,
                kchi.as_ref().map(|_| None).map_err(Clone::clone),
            );
            if let [m] = f.constituents() {
                rep.check(
                    "single constituent gives the Tutte polynomial",
                    &subject,
                    Ok(poly_check(&kt, &tutte_delcontr(m), "KT vs T")),
                );
            }
            rep.push("kt", Item::Poly(kt));
            if let Ok(k) = kchi {
                rep.push("kchi", Item::Poly(k));
            }
            Ok(rep)
        }
        Verb::Lvt { first, second } => {
            let (m1, m2) = (resolve_matroid(first)?, resolve_matroid(second)?);
            let mut rep = Report::new(
                vec!["lvt".into(), first.clone(), second.clone()],
                seed,
                &[canonical(&m1), canonical(&m2)],
            );
            let subject = format!("{first} {second}");
            let p = lvt(engine, &m1, &m2)?;
            rep.check("subset sum equals localization", &subject, Ok(None));
            if m1 == m2 {
                let t = tutte_delcontr(&m1).with_vars(&["x", "y", "z"])?;
                rep.check(
                    "diagonal gives the Tutte polynomial",
                    &subject,
                    Ok(poly_check(&p, &t, "LVT vs T")),
                );
            }
            rep.push("lvt", Item::Poly(p));
            Ok(rep)
        }
        Verb::Check {
            inputs,
            corpus: choice,
        } => {
            let mut entries: Vec<Entry> = match choice {
                Some(CorpusChoice::Builtin) => corpus::builtin(),
                Some(CorpusChoice::Uniform) => corpus::uniforms(),
                Some(CorpusChoice::Named) => corpus::named(),
                None if inputs.is_empty() => corpus::builtin(),
                None => vec![],
            };
            for i in inputs {
                entries.push(Entry {
                    name: i.clone(),
                    matroid: resolve_matroid(i)?,
                });
            }
            let mut cmd = vec!["check".to_string()];
            cmd.extend(inputs.iter().cloned());
            if let Some(c) = choice {
                cmd.push(format!(
                    "--corpus={}",
                    c.to_possible_value()
                        .expect("no skipped variants")
                        .get_name()
                ));
            }
            let canon: Vec<String> = entries.iter().map(|e| canonical(&e.matroid)).collect();
            let mut rep = Report::new(cmd, seed, &canon);
            for e in &entries {
                check_matroid(engine, &mut rep, &e.name, &e.matroid);
            }
            check_global(engine, &mut rep);
            Ok(rep)
        }
    }
}

fn check_triple_tutte(rep: &mut Report, m: &Matroid, subject: &str, t: &SparsePoly) {
    let cn = tutte_coranknullity(m);
    let cv = tutte_convolution(m);
    let outcome = poly_check(t, &cn, "deletion-contraction vs corank-nullity")
        .or_else(|| poly_check(t, &cv, "deletion-contraction vs convolution"))
        .or_else(|| {
            let v = tutte_at(t, 2, 2);
            let want = Int::from(1u64 << m.n1());
            (v != want.clone().into()).then(|| format!("T(2,2) = {v}, expected {want}"))
        });
    rep.check("three Tutte computations agree", subject, Ok(outcome));
}

/// Every per-matroid identity of the ledger.
pub fn check_matroid(engine: &Engine, rep: &mut Report, name: &str, m: &Matroid) {
    let tutte = tutte_delcontr(m);
    check_triple_tutte(rep, m, name, &tutte);
    let tt = t_transform(m);
    let degrees = taut_degree_polynomial(engine, m);
    let theorem_a = match (&degrees, &tt) {
        (Ok(d), Ok(t)) => Ok(poly_check(d, t, "degrees vs transform")),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    rep.check("degrees equal the Tutte transform", name, theorem_a);
    if let Ok(d) = &degrees {
        let (a, b) = (beta_from_degrees(d, m), beta_pair(m));
        rep.check(
            "beta from degrees",
            name,
            Ok((a != b).then(|| format!("{a:?} vs {b:?}"))),
        );
    }
    if let Ok(t) = &tt {
        let dual = t_transform(&m.dual())
            .map(|td| poly_check(&td, &swap_dual(t), "dual transform vs swapped"));
        rep.check("duality swaps the variables", name, dual);
        let lc =
            logconcave_unbroken_check(t, (m.n1() - 1) as u32).map(|v| v.map(|v| v.to_string()));
        rep.check("log-concave unbroken", name, lc);
    }
    let rec = coalgebra_recursion_check(m, 0)
        .map(|w| w.map(|w| format!("recursion {} fails at pivot {}", w.which, w.pivot)));
    rep.check("coalgebra recursions", name, rec);
    if m.rank() >= 1 {
        let mut ints = MinorIntegrals::new(engine);
        let mut top = None;
        for k in 0..m.rank() {
            let outcome = csm_weight_with(&mut ints, m, k).map(|w| {
                let bad = mw_balance_check(&w).map(|c| format!("unbalanced at {:?}", c.to_lists()));
                if k + 1 == m.rank() {
                    top = Some(w);
                }
                bad
            });
            rep.check(&format!("csm_{k} routes agree and balance"), name, outcome);
        }
        if let Some(top) = top {
            let b = bergman_weight(engine, m).map(|b| {
                (b != top).then(|| "top CSM class differs from the Bergman class".to_string())
            });
            rep.check("Bergman class is the top CSM class", name, b);
        }
    }
    let higgs = higgs_chern_roots_check(m).map(|w| w.map(|s| format!("fails at {}", s.word())));
    rep.check("Higgs-lift line bundles split S and Q", name, higgs);
    if m.n1() <= CHI_CHECK_LIMIT {
        let fs = fs_tutte(engine, m).map(|p| {
            let uv = SparsePoly::from_terms(
                &["u", "v"],
                tutte.terms().map(|(e, c)| (e.0.clone(), c.clone())),
            );
            poly_check(&p, &uv, "Euler characteristics vs Tutte")
        });
        rep.check("Euler characteristic routes and Tutte", name, fs);
    }
}

fn check_global(engine: &Engine, rep: &mut Report) {
    for n1 in 1..=CHI_CHECK_LIMIT {
        let chi = chi_structure_sheaf(engine, n1)
            .map(|c| (c != Int::from(1)).then(|| format!("χ(O) = {c}")));
        rep.check("χ of the structure sheaf is 1", &format!("|E| = {n1}"), chi);
    }
    let v = valuativity_demo(engine, 2).map(|_| None);
    rep.check("valuativity on the split of U2,4", "U2,4", v);
}

/// Parses `args`, runs, prints the report and returns the exit code:
/// 0 when every check passes, 1 when one fails, 2 on errors.
pub fn main_with_args(args: impl IntoIterator<Item = String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(rep) => {
            let out = match cli.format {
                Format::Json => rep.to_json_string(),
                Format::Text => rep.to_text(),
            };
            print!("{out}");
            if rep.all_passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
