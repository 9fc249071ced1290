use super::{Module, ModuleError, Sl2Error, Sl2Module};
use crate::field::Field;
use crate::linalg::Matrix;
use serde::{Deserialize, Serialize};

/// Wire form of a module: row-major integer matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub p: u32,
    pub dim: usize,
    pub x: Vec<Vec<i64>>,
    pub y: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sl2Json {
    pub p: u32,
    pub dim: usize,
    pub e: Vec<Vec<i64>>,
    pub f: Vec<Vec<i64>>,
    pub h: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemaError {
    #[error("field `{field}`: {reason}")]
    Field { field: String, reason: String },
    #[error(transparent)]
    Invariant(#[from] ModuleError),
    #[error(transparent)]
    Sl2(#[from] Sl2Error),
}

fn field_err(field: &str, reason: impl Into<String>) -> SchemaError {
    SchemaError::Field { field: field.to_string(), reason: reason.into() }
}

fn to_rows<F: Field>(m: &Matrix<F>) -> Vec<Vec<i64>> {
    m.to_ints()
}

fn from_rows<F: Field>(field: &str, rows: &[Vec<i64>], dim: usize) -> Result<Matrix<F>, SchemaError> {
    if rows.len() != dim {
        return Err(field_err(field, format!("expected {dim} rows, found {}", rows.len())));
    }
    let q = F::order() as i64;
    let mut m = Matrix::zeros(dim, dim);
    for (i, r) in rows.iter().enumerate() {
        if r.len() != dim {
            return Err(field_err(field, format!("row {i} has {} entries, expected {dim}", r.len())));
        }
        for (j, &v) in r.iter().enumerate() {
            m.set(i, j, F::from_index(v.rem_euclid(q) as u64));
        }
    }
    Ok(m)
}

fn check_p<F: Field>(p: u32) -> Result<(), SchemaError> {
    if p != F::CHAR {
        return Err(field_err("p", format!("expected {}, found {p}", F::CHAR)));
    }
    Ok(())
}

impl<F: Field> Module<F> {
    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            p: F::CHAR,
            dim: self.dim(),
            x: to_rows(&self.x),
            y: to_rows(&self.y),
            grading: self.grading.clone(),
            name: self.name.clone(),
        }
    }

    pub fn from_json(j: &ModuleJson) -> Result<Self, SchemaError> {
        check_p::<F>(j.p)?;
        let x = from_rows("x", &j.x, j.dim)?;
        let y = from_rows("y", &j.y, j.dim)?;
        if let Some(g) = &j.grading {
            if g.len() != j.dim {
                return Err(field_err("grading", format!("expected {} labels, found {}", j.dim, g.len())));
            }
        }
        let mut m = Module::new(x, y, j.grading.clone())?;
        m.name = j.name.clone();
        Ok(m)
    }
}

impl<F: Field> Sl2Module<F> {
    pub fn to_json(&self) -> Sl2Json {
        Sl2Json {
            p: F::CHAR,
            dim: self.dim(),
            e: to_rows(self.e()),
            f: to_rows(self.f()),
            h: to_rows(self.h()),
            name: self.name().map(str::to_string),
        }
    }

    pub fn from_json(j: &Sl2Json) -> Result<Self, SchemaError> {
        check_p::<F>(j.p)?;
        let e = from_rows("e", &j.e, j.dim)?;
        let f = from_rows("f", &j.f, j.dim)?;
        let h = from_rows("h", &j.h, j.dim)?;
        let m = Sl2Module::new(e, f, h)?;
        Ok(match &j.name {
            Some(n) => m.named(n.clone()),
            None => m,
        })
    }
}
