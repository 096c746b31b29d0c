//! JSON formats for matroids, flags, polytopes, polynomials and weights.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{parse_rat, rat_to_string, Int, SparsePoly};
use crate::error::{Error, Result};
use crate::genperm::GenPerm;
use crate::invariants::MinkowskiWeight;
use crate::matroid::subset::{self, Mask};
use crate::matroid::{Chain, FlagMatroid, Matroid};
use crate::taut::{localizations, KClass};

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum MatroidJson {
    Tagged(TaggedMatroid),
    Bases {
        ground_set: usize,
        bases: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum TaggedMatroid {
    Uniform {
        r: usize,
        n: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GenPermJson {
    Symbolic(SymbolicPolytope),
    Table {
        ground_set: usize,
        rk: BTreeMap<String, i64>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum SymbolicPolytope {
    BasePolytope { matroid: Value },
    Hypersimplex { r: usize, n: usize },
}

#[derive(Debug, Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct WeightJson {
    dim: usize,
    weights: Vec<WeightEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct WeightEntry {
    chain: Vec<Vec<usize>>,
    w: i64,
}

fn parse_err(at: &str, e: serde_json::Error) -> Error {
    let at = if e.line() > 0 {
        format!("{at}:{}:{}", e.line(), e.column())
    } else {
        at.to_string()
    };
    Error::ParseError {
        at,
        msg: e.to_string(),
    }
}

/// Axiom failures become `ValidationError`; everything else passes through.
fn validation(e: Error) -> Error {
    match e {
        Error::ExchangeAxiomViolation { .. }
        | Error::UnequalCardinality(..)
        | Error::EmptyBases
        | Error::SubmodularityViolation { .. }
        | Error::InvalidFlag(_)
        | Error::SubsetOutOfRange { .. } => Error::ValidationError(e.to_string()),
        other => other,
    }
}

pub fn matroid_from_value(v: Value, at: &str) -> Result<Matroid> {
    let parsed: MatroidJson = serde_json::from_value(v).map_err(|e| parse_err(at, e))?;
    let m = match parsed {
        MatroidJson::Tagged(TaggedMatroid::Uniform { r, n }) => Matroid::uniform(r, n),
        MatroidJson::Tagged(TaggedMatroid::Graphic { vertices, edges }) => {
            Matroid::graphic(vertices, &edges)
        }
        MatroidJson::Bases { ground_set, bases } => Matroid::from_basis_lists(ground_set, &bases),
    };
    m.map_err(validation)
}

pub fn parse_matroid_str(text: &str, at: &str) -> Result<Matroid> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(at, e))?;
    matroid_from_value(v, at)
}

/// The explicit-bases form, which every matroid has.
pub fn matroid_to_value(m: &Matroid) -> Value {
    json!({ "ground_set": m.n1(), "bases": m.basis_lists() })
}

/// A flag is either a JSON array of matroids or `{"constituents": [...]}`.
pub fn parse_flag_str(text: &str, at: &str) -> Result<FlagMatroid> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(at, e))?;
    let items = match v {
        Value::Array(a) => a,
        Value::Object(mut o) => match o.remove("constituents") {
            Some(Value::Array(a)) => a,
            _ => {
                return Err(Error::ParseError {
                    at: at.into(),
                    msg: "expected an array of matroids or a \"constituents\" field".into(),
                })
            }
        },
        _ => {
            return Err(Error::ParseError {
                at: at.into(),
                msg: "expected an array of matroids".into(),
            })
        }
    };
    let mats = items
        .into_iter()
        .enumerate()
        .map(|(i, m)| matroid_from_value(m, &format!("{at}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    FlagMatroid::new(mats).map_err(validation)
}

pub fn flag_to_value(f: &FlagMatroid) -> Value {
    Value::Array(f.constituents().iter().map(matroid_to_value).collect())
}

fn parse_subset_key(key: &str, at: &str) -> Result<Mask> {
    let elems: Vec<usize> = serde_json::from_str(key).map_err(|e| Error::ParseError {
        at: format!("{at}: key {key}"),
        msg: e.to_string(),
    })?;
    Ok(subset::from_elems(&elems))
}

pub fn genperm_from_value(v: Value, at: &str) -> Result<GenPerm> {
    let parsed: GenPermJson = serde_json::from_value(v).map_err(|e| parse_err(at, e))?;
    match parsed {
        GenPermJson::Symbolic(SymbolicPolytope::BasePolytope { matroid }) => Ok(
            GenPerm::base_polytope(&matroid_from_value(matroid, &format!("{at}.matroid"))?),
        ),
        GenPermJson::Symbolic(SymbolicPolytope::Hypersimplex { r, n }) => {
            Ok(GenPerm::base_polytope(&Matroid::uniform(r, n)?))
        }
        GenPermJson::Table { ground_set, rk } => {
            if ground_set == 0 || ground_set > subset::MAX_GROUND {
                return Err(Error::ValidationError(format!(
                    "bad ground set size {ground_set}"
                )));
            }
            let mut table = vec![None; 1 << ground_set];
            table[0] = Some(0);
            for (k, v) in rk {
                let s = parse_subset_key(&k, at)? as usize;
                if s >= table.len() {
                    return Err(Error::ValidationError(format!(
                        "subset {k} leaves the ground set"
                    )));
                }
                table[s] = Some(v);
            }
            let rk = table
                .into_iter()
                .enumerate()
                .map(|(s, v)| {
                    v.ok_or_else(|| Error::ParseError {
                        at: format!("{at}.rk"),
                        msg: format!("missing value for {:?}", subset::elems(s as Mask)),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            GenPerm::from_table(ground_set, rk).map_err(validation)
        }
    }
}

pub fn parse_genperm_str(text: &str, at: &str) -> Result<GenPerm> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(at, e))?;
    genperm_from_value(v, at)
}

pub fn genperm_to_value(p: &GenPerm) -> Value {
    let rk: serde_json::Map<String, Value> = (1..p.table().len())
        .map(|s| {
            let key = serde_json::to_string(&subset::elems(s as Mask)).expect("vector of integers");
            (key, json!(p.rk(s as Mask)))
        })
        .collect();
    json!({ "ground_set": p.n1(), "rk": rk })
}

pub fn poly_to_value(p: &SparsePoly) -> Value {
    let j = PolyJson {
        vars: p.vars().to_vec(),
        terms: p
            .terms()
            .map(|(m, c)| TermJson {
                exp: m.0.clone(),
                coeff: rat_to_string(c),
            })
            .collect(),
    };
    serde_json::to_value(j).expect("plain data")
}

pub fn poly_from_value(v: Value, at: &str) -> Result<SparsePoly> {
    let j: PolyJson = serde_json::from_value(v).map_err(|e| parse_err(at, e))?;
    let vars: Vec<&str> = j.vars.iter().map(String::as_str).collect();
    let mut terms = Vec::with_capacity(j.terms.len());
    for (i, t) in j.terms.into_iter().enumerate() {
        if t.exp.len() != vars.len() {
            return Err(Error::ParseError {
                at: format!("{at}.terms[{i}]"),
                msg: format!(
                    "exponent has {} entries for {} variables",
                    t.exp.len(),
                    vars.len()
                ),
            });
        }
        let c = parse_rat(&t.coeff).ok_or_else(|| Error::ParseError {
            at: format!("{at}.terms[{i}].coeff"),
            msg: format!("not a rational number: {:?}", t.coeff),
        })?;
        terms.push((t.exp, c));
    }
    Ok(SparsePoly::from_terms(&vars, terms))
}

pub fn weight_to_value(w: &MinkowskiWeight) -> Value {
    if w.is_zero() {
        return json!({});
    }
    let weights: Vec<Value> = w
        .weights
        .iter()
        .map(|(c, x)| json!({ "chain": c.to_lists(), "w": int_value(x) }))
        .collect();
    json!({ "dim": w.dim, "weights": weights })
}

pub fn weight_from_value(v: Value, n1: usize, at: &str) -> Result<MinkowskiWeight> {
    if v.as_object().is_some_and(|o| o.is_empty()) {
        return Err(Error::ParseError {
            at: at.into(),
            msg: "the empty weight carries no dimension".into(),
        });
    }
    let j: WeightJson = serde_json::from_value(v).map_err(|e| parse_err(at, e))?;
    let mut out = MinkowskiWeight::new(n1, j.dim);
    for e in j.weights {
        let sets = e.chain.iter().map(|s| subset::from_elems(s)).collect();
        out.set(Chain::new(sets, n1)?, Int::from(e.w));
    }
    Ok(out)
}

/// Largest ground set for which localization dumps are produced.
pub const DUMP_LIMIT: usize = 4;

/// Every fixed-point value of a class as `{"σ-word": [{"exp", "coeff"}, ...]}`.
pub fn localization_dump(class: &KClass) -> Result<Value> {
    if class.n1() > DUMP_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "localization dumps are limited to {DUMP_LIMIT} elements"
        )));
    }
    let mut out = serde_json::Map::new();
    for (sigma, l) in localizations(class)? {
        let terms: Vec<Value> = l
            .terms()
            .map(|(e, c)| json!({ "exp": e, "coeff": c }))
            .collect();
        out.insert(sigma.word(), Value::Array(terms));
    }
    Ok(Value::Object(out))
}

/// Integers that fit are JSON numbers; larger ones are decimal strings.
pub fn int_value(x: &Int) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_shorthand() {
        let m = parse_matroid_str(r#"{"type":"uniform","r":2,"n":4}"#, "t").unwrap();
        assert_eq!(m, Matroid::uniform(2, 4).unwrap());
    }

    #[test]
    fn exchange_violation_is_a_validation_error() {
        let e = parse_matroid_str(r#"{"ground_set":4,"bases":[[0,1],[2,3]]}"#, "t").unwrap_err();
        assert!(matches!(e, Error::ValidationError(_)), "{e:?}");
    }

    #[test]
    fn malformed_json_reports_position() {
        let e = parse_matroid_str("{\"ground_set\": 4,\n \"bases\": [", "f.json").unwrap_err();
        match e {
            Error::ParseError { at, .. } => assert!(at.starts_with("f.json:2:")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn flag_from_uniforms() {
        let f = parse_flag_str(
            r#"[{"type":"uniform","r":1,"n":3},{"type":"uniform","r":2,"n":3}]"#,
            "t",
        )
        .unwrap();
        assert_eq!(f.ranks(), vec![1, 2]);
        let bad = parse_flag_str(
            r#"[{"ground_set":3,"bases":[[0],[1]]},{"ground_set":3,"bases":[[0,1],[1,2]]}]"#,
            "t",
        );
        assert!(matches!(bad, Err(Error::ValidationError(_))));
    }

    #[test]
    fn empty_weight_renders_as_empty_object() {
        assert_eq!(
            weight_to_value(&MinkowskiWeight::new(3, 1)).to_string(),
            "{}"
        );
    }

    #[test]
    fn dump_of_s_on_two_elements() {
        let d = localization_dump(&KClass::s(&Matroid::uniform(1, 2).unwrap())).unwrap();
        assert_eq!(
            d.to_string(),
            r#"{"01":[{"exp":[-1,0],"coeff":1}],"10":[{"exp":[0,-1],"coeff":1}]}"#
        );
    }

    #[test]
    fn genperm_round_trip() {
        let p = GenPerm::base_polytope(&Matroid::uniform(2, 4).unwrap());
        let back = genperm_from_value(genperm_to_value(&p), "t").unwrap();
        assert_eq!(back.table(), p.table());
        let h = parse_genperm_str(r#"{"type":"hypersimplex","r":2,"n":4}"#, "t").unwrap();
        assert_eq!(h.table(), p.table());
    }
}
