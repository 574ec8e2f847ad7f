//! JSON ring files: `rank`, `duality`, optional `labels`, and the nested
//! structure tensor `N`.

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::ring::{FusionRing, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingFileError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field {field}: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    rank: i64,
    duality: Vec<i64>,
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(rename = "N")]
    n: Value,
}

fn field(name: impl Into<String>, message: impl Into<String>) -> RingFileError {
    RingFileError::Field {
        field: name.into(),
        message: message.into(),
    }
}

fn array_of_len<'a>(v: &'a Value, path: &str, len: usize) -> Result<&'a [Value], RingFileError> {
    let arr = v
        .as_array()
        .ok_or_else(|| field(path, "expected an array"))?;
    if arr.len() != len {
        return Err(StructureError::TensorShape {
            path: path.to_string(),
            expected: len,
            found: arr.len(),
        }
        .into());
    }
    Ok(arr)
}

/// Parses a ring document. Only structural validity is checked.
pub fn parse_ring(text: &str) -> Result<FusionRing, RingFileError> {
    let raw: RawRing = serde_json::from_str(text).map_err(|e| RingFileError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.rank <= 0 {
        return Err(StructureError::EmptyRing.into());
    }
    let rank = raw.rank as usize;
    if raw.duality.len() != rank {
        return Err(StructureError::DualityLength {
            expected: rank,
            found: raw.duality.len(),
        }
        .into());
    }
    let mut dual = Vec::with_capacity(rank);
    for (index, &d) in raw.duality.iter().enumerate() {
        if d < 0 || d as usize >= rank {
            return Err(field(
                format!("duality[{index}]"),
                format!("{d} is not a basis index below {rank}"),
            ));
        }
        dual.push(d as usize);
    }
    let mut n = Vec::with_capacity(rank * rank * rank);
    let rows = array_of_len(&raw.n, "N", rank)?;
    for (i, row) in rows.iter().enumerate() {
        let cols = array_of_len(row, &format!("N[{i}]"), rank)?;
        for (j, col) in cols.iter().enumerate() {
            let entries = array_of_len(col, &format!("N[{i}][{j}]"), rank)?;
            for (k, e) in entries.iter().enumerate() {
                let value = e
                    .as_i64()
                    .ok_or_else(|| field(format!("N[{i}][{j}][{k}]"), "expected an integer"))?;
                if value < 0 {
                    return Err(StructureError::NegativeEntry { i, j, k, value }.into());
                }
                let value = u32::try_from(value)
                    .map_err(|_| StructureError::EntryTooLarge { i, j, k, value })?;
                n.push(value);
            }
        }
    }
    Ok(FusionRing::new(dual, n, raw.labels)?)
}

fn json_string(s: &str) -> String {
    Value::String(s.to_string()).to_string()
}

fn int_list(v: impl IntoIterator<Item = impl ToString>) -> String {
    let parts: Vec<String> = v.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Serializes a ring with one `N[i]` block per line.
pub fn serialize_ring(ring: &FusionRing) -> String {
    let r = ring.rank();
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"rank\": {r},\n"));
    out.push_str(&format!("  \"duality\": {},\n", int_list(ring.duality())));
    if let Some(labels) = ring.labels() {
        let quoted: Vec<String> = labels.iter().map(|l| json_string(l)).collect();
        out.push_str(&format!("  \"labels\": [{}],\n", quoted.join(", ")));
    }
    out.push_str("  \"N\": [\n");
    for i in 0..r {
        let rows: Vec<String> = (0..r).map(|j| int_list(ring.product_row(i, j))).collect();
        let sep = if i + 1 < r { "," } else { "" };
        out.push_str(&format!("    [{}]{sep}\n", rows.join(", ")));
    }
    out.push_str("  ]\n}\n");
    out
}
