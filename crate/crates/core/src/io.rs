//! File formats: code arrays as JSON with fixed-width hex symbols, and info
//! vectors as a raw hex stream or a JSON list.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::hermitian::{CodeArray, CodeParams};

/// `{"s": .., "m": .., "rows": [[hex, ..], ..]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayFile {
    pub s: u32,
    pub m: usize,
    pub rows: Vec<Vec<String>>,
}

pub fn format_elem(field: &FieldSpec, e: Elem) -> String {
    format!("{:0width$x}", e.value(), width = field.hex_width())
}

pub fn parse_elem(field: &FieldSpec, token: &str) -> Result<Elem> {
    let t = token.trim();
    let t = t.strip_prefix("0x").unwrap_or(t);
    let v = u32::from_str_radix(t, 16)
        .map_err(|e| Error::Format(format!("bad hex symbol {token:?}: {e}")))?;
    field.elem(v)
}

impl ArrayFile {
    pub fn from_array(field: &FieldSpec, m: usize, array: &CodeArray) -> Self {
        ArrayFile {
            s: field.s(),
            m,
            rows: (0..array.rows())
                .map(|r| {
                    array
                        .row(r)
                        .iter()
                        .map(|&e| format_elem(field, e))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(format!("array file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("array file serializes")
    }

    pub fn to_array(&self, field: &FieldSpec) -> Result<CodeArray> {
        if self.s != field.s() {
            return Err(Error::Format(format!(
                "array is over s={}, expected s={}",
                self.s,
                field.s()
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|t| parse_elem(field, t)).collect())
            .collect::<Result<Vec<Vec<Elem>>>>()?;
        let array = CodeArray::from_rows(rows)?;
        array.check_shape(field.q())?;
        Ok(array)
    }
}

/// Reads an info vector: a JSON list of hex strings, a code-array JSON
/// object (info positions are read out), or whitespace/comma separated hex.
pub fn parse_info(params: &CodeParams, text: &str) -> Result<Vec<Elem>> {
    let f = params.field();
    let trimmed = text.trim_start();
    let info = if trimmed.starts_with('[') {
        let tokens: Vec<serde_json::Value> =
            serde_json::from_str(trimmed).map_err(|e| Error::Format(format!("info list: {e}")))?;
        tokens
            .iter()
            .map(|v| match v {
                serde_json::Value::String(s) => parse_elem(f, s),
                serde_json::Value::Number(n) => n
                    .as_u64()
                    .ok_or_else(|| Error::Format(format!("bad symbol {n}")))
                    .and_then(|n| f.elem(n as u32)),
                other => Err(Error::Format(format!("bad symbol {other}"))),
            })
            .collect::<Result<Vec<_>>>()?
    } else if trimmed.starts_with('{') {
        let array = ArrayFile::parse(trimmed)?.to_array(f)?;
        params.read_info(&array)
    } else {
        trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| parse_elem(f, t))
            .collect::<Result<Vec<_>>>()?
    };
    if info.len() != params.k() {
        return Err(Error::LengthMismatch {
            expected: params.k(),
            found: info.len(),
        });
    }
    Ok(info)
}
