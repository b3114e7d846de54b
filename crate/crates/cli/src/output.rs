use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Graph6,
}

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if !n.is_i64() && !n.is_u64() => {
            if let Some(x) = n.as_f64().map(sig12).and_then(serde_json::Number::from_f64) {
                *n = x;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

pub fn to_value(x: &impl Serialize) -> Value {
    let mut v = serde_json::to_value(x).expect("reports serialize");
    round_floats(&mut v);
    v
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// One JSON document for a single record, an array otherwise; CSV gets one
/// row per record with nested values inlined as JSON.
pub fn write_records(out: &mut impl Write, records: &[Value], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let doc = if records.len() == 1 { records[0].clone() } else { Value::Array(records.to_vec()) };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)
        }
        Format::Csv => {
            let mut header: Vec<String> = Vec::new();
            for r in records {
                let keys = match r {
                    Value::Object(m) => m.keys().cloned().collect(),
                    _ => vec!["value".to_string()],
                };
                for k in keys {
                    if !header.contains(&k) {
                        header.push(k);
                    }
                }
            }
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&header)?;
            for r in records {
                let row: Vec<String> = match r {
                    Value::Object(m) => header.iter().map(|k| m.get(k).map(cell).unwrap_or_default()).collect(),
                    other => vec![cell(other)],
                };
                w.write_record(&row)?;
            }
            w.flush()
        }
        Format::Graph6 => unreachable!("graph6 output is handled by the caller"),
    }
}

pub fn object(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}
