//! Matrix JSON interchange: `{"n": <int>, "data": [[row], ...]}` row-major.
//! The reader symmetrizes and validates like every other constructor.

use super::matrix::SymMatrix;
use crate::error::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::path::Path;

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    data: Vec<Vec<f64>>,
}

impl Serialize for SymMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            n: self.n(),
            data: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        if raw.data.len() != raw.n {
            return Err(D::Error::custom(format!(
                "expected {} rows, found {}",
                raw.n,
                raw.data.len()
            )));
        }
        SymMatrix::from_rows(&raw.data).map_err(|e| D::Error::custom(e.to_string()))
    }
}

pub fn matrix_from_json_str(s: &str) -> Result<SymMatrix> {
    serde_json::from_str(s).map_err(|e| Error::MatrixFormat(e.to_string()))
}

pub fn matrix_to_json_string(m: &SymMatrix) -> String {
    serde_json::to_string(m).expect("matrix serialization cannot fail")
}

pub fn read_matrix_file(path: &Path) -> Result<SymMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::MatrixFormat(format!("{}: {e}", path.display())))?;
    matrix_from_json_str(&text)
}

pub fn write_matrix_file(path: &Path, m: &SymMatrix) -> Result<()> {
    std::fs::write(path, matrix_to_json_string(m))
        .map_err(|e| Error::MatrixFormat(format!("{}: {e}", path.display())))
}
