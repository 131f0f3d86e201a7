//! One report shape for all commands: a table for markdown and CSV, and one
//! JSON object per line for JSON.

use crate::args::Format;
use serde_json::{Map, Value};
use std::io::{self, Write};

pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub records: Vec<Value>,
    /// Printed under the markdown table.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(columns: Vec<&'static str>) -> Report {
        Report { columns, rows: Vec::new(), records: Vec::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>, record: Value) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
        self.records.push(record);
    }

    pub fn write(&self, format: Format, metadata: &Value, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Markdown => {
                writeln!(out, "| {} |", self.columns.join(" | "))?;
                writeln!(out, "|{}", "---|".repeat(self.columns.len()))?;
                for r in &self.rows {
                    writeln!(out, "| {} |", r.join(" | "))?;
                }
                for n in &self.notes {
                    writeln!(out, "\n{n}")?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()?;
            }
            Format::Json => {
                writeln!(out, "{}", serde_json::to_string(metadata)?)?;
                for r in &self.records {
                    writeln!(out, "{}", serde_json::to_string(r)?)?;
                }
            }
        }
        Ok(())
    }
}

/// `{"kind": kind, ...fields of value}`.
pub fn tagged(kind: &str, value: impl serde::Serialize) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), Value::String(kind.into()));
    match serde_json::to_value(value).expect("plain data serializes") {
        Value::Object(o) => m.extend(o),
        other => {
            m.insert("value".into(), other);
        }
    }
    Value::Object(m)
}

pub fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}
