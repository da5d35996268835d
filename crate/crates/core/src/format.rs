//! Text and JSON matrix formats.
//!
//! Text: a `m n` header line, then `m` lines of `n` quaternion literals
//! separated by `;`. Blank lines and lines starting with `#` are ignored.
//!
//! JSON: `{"rows": m, "cols": n, "data": [["0", "i"], ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<String>>,
}

impl From<&QMatrix> for JsonMatrix {
    fn from(m: &QMatrix) -> Self {
        JsonMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data: m
                .row_vectors()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

impl TryFrom<&JsonMatrix> for QMatrix {
    type Error = Error;
    fn try_from(j: &JsonMatrix) -> Result<QMatrix> {
        if j.data.len() != j.rows || j.data.iter().any(|r| r.len() != j.cols) {
            return Err(Error::Parse(format!(
                "JSON data does not match {}x{}",
                j.rows, j.cols
            )));
        }
        let m = QMatrix::parse_rows(&j.data)?;
        if j.rows == 0 || j.cols == 0 {
            return Ok(QMatrix::zeros(j.rows, j.cols));
        }
        Ok(m)
    }
}

pub fn parse_text(src: &str) -> Result<QMatrix> {
    let mut lines = src
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing `m n` header".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad header `{header}`")))
        })
        .collect::<Result<_>>()?;
    let [m, n] = dims[..] else {
        return Err(Error::Parse(format!("bad header `{header}`")));
    };
    let mut data = Vec::with_capacity(m * n);
    for r in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {m} rows, found {r}")))?;
        let row: Vec<_> = line.split(';').map(str::parse).collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {n}",
                r + 1,
                row.len()
            )));
        }
        data.extend(row);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("unexpected trailing line `{extra}`")));
    }
    QMatrix::from_vec(m, n, data)
}

pub fn parse_json(src: &str) -> Result<QMatrix> {
    let j: JsonMatrix = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
    QMatrix::try_from(&j)
}

/// Detects the JSON form by a leading `{`, otherwise reads the text form.
pub fn parse_any(src: &str) -> Result<QMatrix> {
    if src.trim_start().starts_with('{') {
        parse_json(src)
    } else {
        parse_text(src)
    }
}

pub fn to_text(m: &QMatrix) -> String {
    m.to_string()
}

pub fn to_json(m: &QMatrix) -> String {
    serde_json::to_string(&JsonMatrix::from(m)).expect("matrix serializes")
}
