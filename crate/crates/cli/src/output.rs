use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;

/// What every command prints in JSON mode.
#[derive(Debug, Clone, Serialize)]
pub struct OutputEnvelope {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Value,
    pub violations: Vec<Value>,
}

/// Rows for CSV mode.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table { header: header.to_vec(), rows: Vec::new() }
    }

    pub fn push<I: IntoIterator<Item = String>>(&mut self, row: I) {
        let row: Vec<String> = row.into_iter().collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
    }
}

/// A finished command: the envelope plus its CSV and text renderings.
#[derive(Debug, Clone)]
pub struct Report {
    pub envelope: OutputEnvelope,
    pub table: Table,
    pub text: String,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.envelope).expect("envelope serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.table.to_csv(),
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
        }
    }

    pub fn exit_code(&self) -> u8 {
        u8::from(!self.envelope.violations.is_empty())
    }
}

/// Builds a JSON object from key/value pairs.
pub fn object<I: IntoIterator<Item = (&'static str, Value)>>(pairs: I) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
