//! The JSON workspace document and its canonical printer.
//!
//! Canonical form: object keys sorted, two-space indentation, arrays of
//! scalars (matrix rows) on one line, trailing newline. Parsing a canonical
//! file and printing it again reproduces it byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub type MatrixDoc = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldDoc {
    Rational,
    Prime { p: u64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub mult: MatrixDoc,
    pub unit: MatrixDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraDoc {
    pub dim: usize,
    pub comult: MatrixDoc,
    pub counit: MatrixDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntwiningDoc {
    pub algebra: String,
    pub coalgebra: String,
    pub psi: MatrixDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OneCellDoc {
    pub dom: String,
    pub cod: String,
    #[serde(rename = "dimM")]
    pub dim_m: usize,
    pub alpha: MatrixDoc,
    pub gamma: MatrixDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCellDoc {
    pub dom: String,
    pub cod: String,
    pub theta: MatrixDoc,
}

/// A coring over the algebra `base`; `source` names the entwining it was
/// computed from, if any.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoringDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub base: String,
    pub dim: usize,
    pub lact: MatrixDoc,
    pub ract: MatrixDoc,
    pub comult: MatrixDoc,
    pub counit: MatrixDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorOneCellDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub dom: String,
    pub cod: String,
    pub dim: usize,
    pub lact: MatrixDoc,
    pub ract: MatrixDoc,
    pub zeta: MatrixDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorTwoCellDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub dom: String,
    pub cod: String,
    pub map: MatrixDoc,
}

fn is_empty<T>(m: &BTreeMap<String, T>) -> bool {
    m.is_empty()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceDoc {
    pub field: FieldDoc,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraDoc>,
    #[serde(default)]
    pub coalgebras: BTreeMap<String, CoalgebraDoc>,
    #[serde(default)]
    pub entwinings: BTreeMap<String, EntwiningDoc>,
    #[serde(default)]
    pub one_cells: BTreeMap<String, OneCellDoc>,
    #[serde(default)]
    pub two_cells: BTreeMap<String, TwoCellDoc>,
    #[serde(default, skip_serializing_if = "is_empty")]
    pub corings: BTreeMap<String, CoringDoc>,
    #[serde(default, skip_serializing_if = "is_empty")]
    pub coring_one_cells: BTreeMap<String, CorOneCellDoc>,
    #[serde(default, skip_serializing_if = "is_empty")]
    pub coring_two_cells: BTreeMap<String, CorTwoCellDoc>,
}

impl WorkspaceDoc {
    pub fn parse(text: &str) -> Result<WorkspaceDoc, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_canonical(&self) -> String {
        let value = serde_json::to_value(self).expect("workspace documents serialize");
        let mut out = String::new();
        write_value(&value, 0, &mut out);
        out.push('\n');
        out
    }
}

fn is_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn leaf(v: &Value) -> String {
    serde_json::to_string(v).expect("leaf values serialize")
}

fn indent(level: usize, out: &mut String) {
    for _ in 0..level {
        out.push_str("  ");
    }
}

fn write_value(v: &Value, level: usize, out: &mut String) {
    match v {
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            let n = map.len();
            // serde_json's default map is ordered by key
            for (k, (key, value)) in map.iter().enumerate() {
                indent(level + 1, out);
                out.push_str(&leaf(&Value::String(key.clone())));
                out.push_str(": ");
                write_value(value, level + 1, out);
                if k + 1 < n {
                    out.push(',');
                }
                out.push('\n');
            }
            indent(level, out);
            out.push('}');
        }
        Value::Array(items) if items.iter().all(is_leaf) => {
            let parts: Vec<String> = items.iter().map(leaf).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                indent(level + 1, out);
                write_value(item, level + 1, out);
                if k + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            indent(level, out);
            out.push(']');
        }
        other => out.push_str(&leaf(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_layout() {
        let text = r#"{"field":{"kind":"prime","p":5},"algebras":{"k":{"unit":[["1"]],"mult":[["1"]],"dim":1}}}"#;
        let doc = WorkspaceDoc::parse(text).unwrap();
        let out = doc.to_canonical();
        let expected = "{
  \"algebras\": {
    \"k\": {
      \"dim\": 1,
      \"mult\": [
        [\"1\"]
      ],
      \"unit\": [
        [\"1\"]
      ]
    }
  },
  \"coalgebras\": {},
  \"entwinings\": {},
  \"field\": {
    \"kind\": \"prime\",
    \"p\": 5
  },
  \"one_cells\": {},
  \"two_cells\": {}
}
";
        assert_eq!(out, expected);
        assert_eq!(WorkspaceDoc::parse(&out).unwrap().to_canonical(), out);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(WorkspaceDoc::parse(r#"{"field":{"kind":"rational"},"extra":{}}"#).is_err());
        assert!(WorkspaceDoc::parse(r#"{"field":{"kind":"real"}}"#).is_err());
    }
}
