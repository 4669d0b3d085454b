use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use sigmaloci::simplicial::VertexSet;
use sigmaloci::tau::RationalSubspaceArrangement;

/// One result rendered both as text and as JSON from the same data.
pub struct Report {
    pub text: String,
    pub json: Value,
    /// False when the command ran but a check it performs failed.
    pub ok: bool,
}

impl Report {
    pub fn new(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }

    pub fn boolean(key: &str, value: bool) -> Self {
        Report::new(format!("{value}\n"), json!({ key: value }))
    }
}

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn names_of(names: &[String], s: VertexSet) -> Vec<String> {
    s.iter().map(|v| names[v].clone()).collect()
}

pub fn format_set(names: &[String], s: VertexSet) -> String {
    format!("{{{}}}", names_of(names, s).join(","))
}

pub fn arrangement(a: &RationalSubspaceArrangement) -> Value {
    let members: Vec<Value> = a
        .members()
        .iter()
        .map(|s| {
            let rows: Vec<Value> = s
                .constraints()
                .iter()
                .map(|r| Value::Array(r.iter().map(int).collect()))
                .collect();
            json!({ "dim": s.dim(), "constraints": rows, "text": s.to_string() })
        })
        .collect();
    json!({ "ambient": a.ambient(), "members": members, "text": a.to_string() })
}
