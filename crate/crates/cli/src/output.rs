use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Format;

type WriteResult = Result<(), Box<dyn std::error::Error>>;

pub const SCHEMA_VERSION: &str = "1.0";

/// Columns of the CSV projection of a list of graft reports.
const REPORT_COLUMNS: [&str; 13] = [
    "move_k",
    "move_l",
    "move_m",
    "move_n",
    "r",
    "neg",
    "graft_re",
    "graft_im",
    "j_re",
    "j_im",
    "torsion",
    "dioph_verdict",
    "isog_degree",
];

#[derive(Debug, Serialize)]
pub struct Envelope {
    pub schema_version: &'static str,
    pub command: String,
    pub params: Value,
    pub result: Value,
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ErrorEnvelope {
    pub schema_version: &'static str,
    pub command: String,
    pub params: Value,
    pub error: Value,
}

impl ErrorEnvelope {
    pub fn new(command: String, params: Value, hypothesis: &str, kind: &str, message: String) -> Self {
        ErrorEnvelope {
            schema_version: SCHEMA_VERSION,
            command,
            params,
            error: json!({ "hypothesis": hypothesis, "kind": kind, "message": message }),
        }
    }
}

pub fn write_envelope(out: &mut impl Write, env: &Envelope, format: Format, reports: bool) -> WriteResult {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, env)?;
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "# schema_version: {}", env.schema_version)?;
            writeln!(out, "# command: {}", env.command)?;
            for w in &env.warnings {
                writeln!(out, "# warning: {w}")?;
            }
            let mut wtr = csv::Writer::from_writer(&mut *out);
            if reports {
                write_reports(&mut wtr, &env.result)?;
            } else {
                wtr.write_record(["key", "value"])?;
                let mut rows = Vec::new();
                flatten("", &env.result, &mut rows);
                for (k, v) in rows {
                    wtr.write_record([k, v])?;
                }
            }
            wtr.flush()?;
        }
    }
    Ok(())
}

fn write_reports<W: Write>(wtr: &mut csv::Writer<W>, result: &Value) -> WriteResult {
    wtr.write_record(REPORT_COLUMNS)?;
    for r in result.as_array().into_iter().flatten() {
        let mv = &r["move"];
        let gamma = &mv["gamma"];
        let cell = |v: &Value| match v {
            Value::Null => String::new(),
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let torsion = match &r["torsion"]["order"] {
            Value::Null => "none".to_string(),
            o => o.to_string(),
        };
        wtr.write_record([
            cell(&gamma[0][0]),
            cell(&gamma[0][1]),
            cell(&gamma[1][0]),
            cell(&gamma[1][1]),
            cell(&mv["r"]),
            cell(&mv["use_negation"]),
            cell(&r["graft_exponent"][0]),
            cell(&r["graft_exponent"][1]),
            cell(&r["graft_j"][0]),
            cell(&r["graft_j"][1]),
            torsion,
            cell(&r["diophantine"]["verdict"]),
            cell(&r["isogeny_to_source"]["degree"]),
        ])?;
    }
    Ok(())
}

/// Flatten nested JSON into dotted keys; array elements are indexed.
fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&key(k), child, rows);
            }
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), child, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        Value::Null => rows.push((prefix.to_string(), String::new())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}
