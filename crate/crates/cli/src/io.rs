use std::fs;
use std::path::{Path, PathBuf};

use kgraph_core::{Degree, Error, KGraph};
use serde::Serialize;

pub const OK: u8 = 0;
pub const VALIDATION: u8 = 1;
pub const CHECK: u8 = 2;
pub const SCHEMA: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn schema(message: impl Into<String>) -> Self {
        Failure { code: SCHEMA, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Schema(_)
            | Error::UnknownVertex(_)
            | Error::UnknownEdge(_)
            | Error::DuplicateId(_)
            | Error::DuplicateSquareSide(..)
            | Error::InvalidMorphism(_)
            | Error::Coefficients(_)
            | Error::Index(_)
            | Error::Undefined(_) => SCHEMA,
            _ => CHECK,
        };
        Failure { code, message: e.to_string() }
    }
}

pub type Outcome<T> = Result<T, Failure>;

pub fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::schema(format!("cannot read {}: {e}", path.display())))
}

pub fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> Outcome<T> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::schema(format!("{}: {e}", path.display())))
}

pub fn load_graph(path: &Path) -> Outcome<KGraph> {
    KGraph::from_json(&read(path)?).map_err(|e| Failure::schema(format!("{}: {e}", path.display())))
}

/// Load and validate; a failing validation report is emitted and mapped to exit code 1.
pub fn load_valid(path: &Path, out: Option<&PathBuf>) -> Outcome<KGraph> {
    let mut g = load_graph(path)?;
    let report = g.validate(&Degree::uniform(g.k(), 2));
    if !report.pass {
        emit(&report, out)?;
        return Err(Failure { code: VALIDATION, message: format!("{} failed validation", path.display()) });
    }
    Ok(g)
}

pub fn degree(text: &str, k: usize) -> Outcome<Degree> {
    let d = Degree::parse(text).ok_or_else(|| Failure::schema(format!("cannot parse degree `{text}`")))?;
    if d.k() != k {
        return Err(Failure::schema(format!("degree `{text}` needs {k} coordinates")));
    }
    Ok(d)
}

pub fn emit<T: Serialize>(value: &T, out: Option<&PathBuf>) -> Outcome<()> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::schema(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
