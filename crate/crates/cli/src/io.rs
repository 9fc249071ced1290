use pnil_core::field::Field;
use pnil_core::module::{ModuleJson, SchemaError, Sl2Json};
use pnil_core::{Module, Sl2Module};
use std::io::Read;
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Schema(#[from] SchemaError),
}

/// Reads a file, or standard input for `-`.
pub fn read_text(path: &str) -> Result<String, IoError> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(Path::new(path)).map(|t| s = t)
    };
    res.map_err(|source| IoError::Read { path: path.to_string(), source })?;
    Ok(s)
}

/// Writes to a file, or standard output when `path` is `None`.
pub fn write_text(path: Option<&str>, text: &str) -> Result<(), IoError> {
    match path {
        None | Some("-") => {
            print!("{text}");
            Ok(())
        }
        Some(p) => std::fs::write(p, text).map_err(|source| IoError::Write { path: p.to_string(), source }),
    }
}

pub fn parse_module_json(text: &str) -> Result<ModuleJson, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn module_from_str<F: Field>(text: &str) -> Result<Module<F>, IoError> {
    Ok(Module::from_json(&parse_module_json(text)?)?)
}

pub fn module_to_string<F: Field>(m: &Module<F>) -> String {
    let mut s = serde_json::to_string_pretty(&m.to_json()).expect("module JSON serialises");
    s.push('\n');
    s
}

pub fn sl2_from_str<F: Field>(text: &str) -> Result<Sl2Module<F>, IoError> {
    let j: Sl2Json = serde_json::from_str(text)?;
    Ok(Sl2Module::from_json(&j)?)
}

pub fn sl2_to_string<F: Field>(m: &Sl2Module<F>) -> String {
    let mut s = serde_json::to_string_pretty(&m.to_json()).expect("module JSON serialises");
    s.push('\n');
    s
}
