//! Machine-readable run reports.
//!
//! JSON objects use `serde_json`'s default sorted map, so key order is
//! canonical and two runs with the same inputs serialize byte-identically.
//! Every asserted quantity is an integer, a boolean, or a `{num, den}`
//! pair; the only float-derived field is `theta_display`, a fixed-precision
//! string that no verdict depends on.

use clap::ValueEnum;
use fq_incidence::{BigInt, Ratio, Status};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub q: u64,
    pub d: usize,
    pub seed: u64,
    pub params: Map<String, Value>,
    pub results: Value,
    pub verdict: Status,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "q": self.q,
            "d": self.d,
            "seed": self.seed,
            "params": self.params,
            "results": self.results,
            "verdict": self.verdict.as_str(),
        })
    }

    pub fn render(&self, format: Format) -> String {
        let value = self.to_json();
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&value).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = String::from("key,value\n");
                for (k, v) in flatten(&value) {
                    s.push_str(&csv_field(&k));
                    s.push(',');
                    s.push_str(&csv_field(&v));
                    s.push('\n');
                }
                s
            }
            Format::Text => flatten(&value)
                .into_iter()
                .map(|(k, v)| format!("{k}: {v}\n"))
                .collect(),
        }
    }
}

/// Dotted-path view of a JSON tree, in document order.
pub fn flatten(value: &Value) -> Vec<(String, String)> {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        let join = |k: &str| {
            if prefix.is_empty() {
                k.to_string()
            } else {
                format!("{prefix}.{k}")
            }
        };
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    walk(&join(k), child, out);
                }
            }
            Value::Array(items) => {
                for (i, child) in items.iter().enumerate() {
                    walk(&join(&i.to_string()), child, out);
                }
            }
            Value::String(s) => out.push((prefix.to_string(), s.clone())),
            other => out.push((prefix.to_string(), other.to_string())),
        }
    }
    let mut out = Vec::new();
    walk("", value, &mut out);
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// An exact integer: a JSON number when it fits in `i64`, a decimal string
/// otherwise.
pub fn big(v: &BigInt) -> Value {
    i64::try_from(v)
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(v.to_string()))
}

pub fn ratio(r: Ratio<u64>) -> Value {
    json!({ "num": r.numer(), "den": r.denom() })
}

pub fn theta_display(theta: f64) -> Value {
    Value::String(format!("{theta:.6}"))
}
