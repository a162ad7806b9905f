#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use serde::Deserialize;

use katzvec::ring_spec::{AnyModule, ModuleSpec};
use katzvec::rings::GaussRing;
use katzvec::{DifferentialModule, QFunctionField};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn load<T: for<'de> Deserialize<'de>>(name: &str) -> T {
    let text = fs::read_to_string(fixture_path(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

pub fn qx_modules() -> Vec<DifferentialModule<QFunctionField>> {
    load::<Vec<ModuleSpec>>("qx_corpus.json")
        .iter()
        .map(|spec| match spec.build().unwrap() {
            AnyModule::Rational(m) => m,
            other => panic!("unexpected ring in qx corpus: {other:?}"),
        })
        .collect()
}

pub fn gauss_modules(p: u64) -> Vec<DifferentialModule<GaussRing>> {
    load::<Vec<ModuleSpec>>(&format!("gauss_p{p}.json"))
        .iter()
        .map(|spec| match spec.build().unwrap() {
            AnyModule::Gauss(m) => m,
            other => panic!("unexpected ring in gauss corpus: {other:?}"),
        })
        .collect()
}

#[derive(Deserialize)]
pub struct VectorCase {
    pub module: ModuleSpec,
    pub coeffs: Vec<Vec<String>>,
}
