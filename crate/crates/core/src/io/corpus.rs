//! The builtin matroid corpus, compiled into the binary.

use serde::Deserialize;
use serde_json::Value;

use super::format::matroid_from_value;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

const UNIFORM: &str = include_str!("../../data/corpus/uniform.json");
const K4: &str = include_str!("../../data/corpus/k4.json");
const FANO: &str = include_str!("../../data/corpus/fano.json");
const NON_FANO: &str = include_str!("../../data/corpus/non_fano.json");
const VAMOS: &str = include_str!("../../data/corpus/vamos.json");
const SPLIT: &str = include_str!("../../data/corpus/split.json");

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub matroid: Matroid,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    matroid: Value,
}

fn load(raw: RawEntry, file: &str) -> Result<Entry> {
    let matroid = matroid_from_value(raw.matroid, &format!("{file}:{}", raw.name))?;
    Ok(Entry {
        name: raw.name,
        matroid,
    })
}

fn load_list(text: &str, file: &str) -> Result<Vec<Entry>> {
    let raw: Vec<RawEntry> = serde_json::from_str(text).map_err(|e| Error::ParseError {
        at: file.into(),
        msg: e.to_string(),
    })?;
    raw.into_iter().map(|r| load(r, file)).collect()
}

fn load_one(text: &str, file: &str) -> Result<Entry> {
    let raw: RawEntry = serde_json::from_str(text).map_err(|e| Error::ParseError {
        at: file.into(),
        msg: e.to_string(),
    })?;
    load(raw, file)
}

/// All uniform matroids on at most seven elements, in order of ground-set
/// size and then rank.
pub fn uniforms() -> Vec<Entry> {
    load_list(UNIFORM, "uniform.json").expect("builtin corpus parses")
}

/// `M(K_4)`, the Fano and non-Fano matroids and the Vámos matroid.
pub fn named() -> Vec<Entry> {
    [
        (K4, "k4.json"),
        (FANO, "fano.json"),
        (NON_FANO, "non_fano.json"),
        (VAMOS, "vamos.json"),
    ]
    .into_iter()
    .map(|(t, f)| load_one(t, f).expect("builtin corpus parses"))
    .collect()
}

/// The whole builtin corpus.
pub fn builtin() -> Vec<Entry> {
    let mut v = uniforms();
    v.extend(named());
    v
}

/// `U_{2,4}` and the three pieces of its split along `x_0 + x_1 = 1`:
/// the two maximal cells followed by their common facet.
pub fn split_triple() -> Vec<Entry> {
    load_list(SPLIT, "split.json").expect("builtin corpus parses")
}

/// Looks a corpus matroid up by name (`U2,4`, `M(K4)`, `F7`, `F7-`, `V8`).
pub fn by_name(name: &str) -> Result<Matroid> {
    builtin()
        .into_iter()
        .chain(split_triple())
        .find(|e| e.name == name)
        .map(|e| e.matroid)
        .ok_or_else(|| Error::InvalidArgument(format!("no corpus matroid named {name:?}")))
}
