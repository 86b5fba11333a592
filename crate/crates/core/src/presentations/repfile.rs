//! JSON representation files:
//! `{"dim": 2, "field": "Q", "matrices": [[["1","0"],["0","-1"]], ...]}`.
//! Entries are integers or `"a/b"` strings.

use serde::{Deserialize, Serialize};

use super::Representation;
use crate::algebra::{Field, Scalar};
use crate::error::{Error, Result};
use crate::matrices::Matrix;

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepFileIn {
    dim: usize,
    field: Field,
    matrices: Vec<Vec<Vec<Entry>>>,
}

#[derive(Serialize)]
struct RepFileOut<'a> {
    dim: usize,
    field: Field,
    matrices: &'a [Vec<Vec<String>>],
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

impl Representation {
    pub fn from_json(text: &str) -> Result<Representation> {
        let file: RepFileIn = serde_json::from_str(text).map_err(json_error)?;
        if file.dim == 0 {
            return Err(Error::InvalidRepresentation("dim must be positive".into()));
        }
        let mut images = Vec::with_capacity(file.matrices.len());
        for (g, rows) in file.matrices.into_iter().enumerate() {
            if rows.len() != file.dim || rows.iter().any(|r| r.len() != file.dim) {
                return Err(Error::Dimension(format!(
                    "matrix {} is not {}x{}",
                    g + 1,
                    file.dim,
                    file.dim
                )));
            }
            let rows: Vec<Vec<Scalar>> = rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|e| match e {
                            Entry::Int(v) => Ok(file.field.from_i64(v)),
                            Entry::Text(t) => file.field.parse_scalar(&t),
                        })
                        .collect::<Result<_>>()
                })
                .collect::<Result<_>>()?;
            images.push(Matrix::from_rows(rows)?);
        }
        Representation::new(images)
    }

    /// Canonical JSON with every entry as a string.
    pub fn to_json(&self) -> String {
        let matrices: Vec<Vec<Vec<String>>> = self
            .images()
            .iter()
            .map(|m| {
                (0..m.rows())
                    .map(|i| m.row(i).iter().map(Scalar::value_string).collect())
                    .collect()
            })
            .collect();
        let out = RepFileOut {
            dim: self.dim(),
            field: self.field(),
            matrices: &matrices,
        };
        serde_json::to_string(&out).expect("serializable representation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_mixed_entries() {
        let text = r#"{"dim": 2, "field": "Q", "matrices": [[[1, "0"], ["0", "-1/2"]]]}"#;
        let rep = Representation::from_json(text).unwrap();
        assert_eq!(rep.dim(), 2);
        assert_eq!(rep.images()[0][(1, 1)].to_string(), "-1/2");
        assert_eq!(Representation::from_json(&rep.to_json()).unwrap(), rep);
    }

    #[test]
    fn modular_field() {
        let text = r#"{"dim": 1, "field": "Fp:7", "matrices": [[["-1"]], [[9]]]}"#;
        let rep = Representation::from_json(text).unwrap();
        assert_eq!(rep.field(), Field::Prime(7));
        assert_eq!(rep.images()[1][(0, 0)].value_string(), "2");
        assert!(rep.to_json().contains("\"Fp:7\""));
    }

    #[test]
    fn rejects_bad_shapes() {
        let text = r#"{"dim": 2, "field": "Q", "matrices": [[[1, 0]]]}"#;
        assert!(Representation::from_json(text).is_err());
        let text = r#"{"dim": 1, "field": "Fp:8", "matrices": [[[1]]]}"#;
        assert!(Representation::from_json(text).is_err());
        let text = r#"{"dim": 1, "field": "Q", "matrices": [[["1/0"]]]}"#;
        assert!(Representation::from_json(text).is_err());
    }
}
