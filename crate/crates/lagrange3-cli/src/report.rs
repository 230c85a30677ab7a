//! Machine-readable reports: one schema for every subcommand, rendered as
//! JSON (documented in docs/report-schema.md), CSV (the same records
//! flattened) or plain text.

use std::collections::BTreeMap;

use lagrange3::{Interval, Quad};
use serde_json::{json, Value};

pub const DECIMAL_DIGITS: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Undecided,
    Failed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Undecided => 2,
            Status::Failed => 1,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Undecided => "undecided",
            Status::Failed => "failed",
        }
    }

    pub fn worsen(&mut self, other: Status) {
        let rank = |s: Status| match s {
            Status::Ok => 0,
            Status::Undecided => 1,
            Status::Failed => 2,
        };
        if rank(other) > rank(*self) {
            *self = other;
        }
    }
}

/// One flat record; keys are ordered so output is deterministic.
pub type Record = BTreeMap<String, String>;

pub struct Report {
    pub command: String,
    pub input: String,
    pub status: Status,
    pub records: Vec<Record>,
    pub summary: BTreeMap<String, Value>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(command: &str, input: String) -> Report {
        Report {
            command: command.to_string(),
            input,
            status: Status::Ok,
            records: Vec::new(),
            summary: BTreeMap::new(),
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    pub fn set_summary(&mut self, key: &str, value: Value) {
        self.summary.insert(key.to_string(), value);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input": self.input,
            "status": self.status.as_str(),
            "elapsed_ms": self.elapsed_ms,
            "results": self.records.iter().map(|r| {
                let mut obj = serde_json::Map::new();
                for (k, v) in r {
                    obj.insert(k.clone(), Value::String(v.clone()));
                }
                Value::Object(obj)
            }).collect::<Vec<_>>(),
            "summary": self.summary.iter().map(|(k, v)| (k.clone(), v.clone())).collect::<serde_json::Map<_,_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut columns: Vec<String> = Vec::new();
        for r in &self.records {
            for k in r.keys() {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
        let mut out = String::new();
        out.push_str(&columns.join(","));
        out.push('\n');
        for r in &self.records {
            let row: Vec<String> = columns
                .iter()
                .map(|c| csv_escape(r.get(c).map(String::as_str).unwrap_or("")))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {} ({} ms)\n  input: {}\n",
            self.command,
            self.status.as_str(),
            self.elapsed_ms,
            self.input
        );
        for (k, v) in &self.summary {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        for r in &self.records {
            let fields: Vec<String> = r.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("  {}\n", fields.join(" ")));
        }
        out
    }

    pub fn render(&self, format: &str) -> String {
        match format {
            "csv" => self.to_csv(),
            "text" => self.to_text(),
            _ => format!("{:#}", self.to_json()),
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Decimal endpoints plus the exact coefficients when the value is a single
/// surd.
pub fn value_fields(record: &mut Record, encl: &Interval, exact: Option<&Quad>) {
    record.insert("value_lo".into(), encl.lo().to_decimal(DECIMAL_DIGITS));
    record.insert("value_hi".into(), encl.hi().to_decimal(DECIMAL_DIGITS));
    if let Some(q) = exact {
        exact_fields(record, q);
    }
}

pub fn exact_fields(record: &mut Record, q: &Quad) {
    let (p, qq, r, d) = q.coeffs();
    record.insert("exact_p".into(), p.to_string());
    record.insert("exact_q".into(), qq.to_string());
    record.insert("exact_r".into(), r.to_string());
    record.insert("exact_d".into(), d.to_string());
}
