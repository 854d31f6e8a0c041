//! Run reports: a fingerprinted header, findings, and two renderings.
//!
//! `records` emits one JSON object per line, `table` a human summary. The
//! same report always renders to the same bytes; timings are never part of
//! it.

use std::fmt::Write as _;

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

pub const TOOL: &str = "gray-auth";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Records,
}

/// One finding: a kind plus ordered fields.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub kind: String,
    pub fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Record {
            kind: kind.to_string(),
            fields: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> String {
        let mut map = Map::new();
        map.insert("kind".into(), Value::String(self.kind.clone()));
        for (k, v) in &self.fields {
            map.insert(k.clone(), v.clone());
        }
        // object keys serialize sorted
        serde_json::to_string(&Value::Object(map)).expect("records serialize")
    }
}

/// A titled, column-aligned block for the table rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Section {
    pub fn new(title: &str, header: &[&str]) -> Self {
        Section {
            title: title.to_string(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn render(&self, out: &mut String) {
        let cols = self
            .header
            .len()
            .max(self.rows.iter().map(|r| r.len()).max().unwrap_or(0));
        let mut widths = vec![0usize; cols];
        for row in std::iter::once(&self.header).chain(&self.rows) {
            for (i, c) in row.iter().enumerate() {
                widths[i] = widths[i].max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, c) in cells.iter().enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                if i + 1 == cells.len() {
                    s.push_str(c);
                } else {
                    let _ = write!(s, "{c:<w$}", w = widths[i]);
                }
            }
            s
        };
        let _ = writeln!(out, "== {}", self.title);
        if !self.header.is_empty() {
            let _ = writeln!(out, "{}", line(&self.header));
        }
        for row in &self.rows {
            let _ = writeln!(out, "{}", line(row));
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub subcommand: String,
    /// Hex SHA-256 of `params`.
    pub fingerprint: String,
    /// Canonical parameter text with every default materialized.
    pub params: String,
    pub records: Vec<Record>,
    pub sections: Vec<Section>,
    /// Set by findings that falsify a checked property.
    pub fatal: bool,
    /// One-line outcome shown last in both renderings.
    pub verdict: String,
}

pub fn fingerprint(params: &str) -> String {
    Sha256::digest(params.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl RunReport {
    pub fn new(subcommand: &str, params: String) -> Self {
        RunReport {
            subcommand: subcommand.to_string(),
            fingerprint: fingerprint(&params),
            params,
            records: Vec::new(),
            sections: Vec::new(),
            fatal: false,
            verdict: String::new(),
        }
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    pub fn section(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn records_of<'a>(&'a self, kind: &'a str) -> impl Iterator<Item = &'a Record> + 'a {
        self.records.iter().filter(move |r| r.kind == kind)
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Records => {
                let header = Record::new("run")
                    .with("tool", TOOL)
                    .with("version", VERSION)
                    .with("subcommand", self.subcommand.as_str())
                    .with("fingerprint", self.fingerprint.as_str())
                    .with("params", self.params.as_str());
                let _ = writeln!(out, "{}", header.to_json());
                for r in &self.records {
                    let _ = writeln!(out, "{}", r.to_json());
                }
                let verdict = Record::new("verdict")
                    .with("fatal", self.fatal)
                    .with("summary", self.verdict.as_str());
                let _ = writeln!(out, "{}", verdict.to_json());
            }
            Format::Table => {
                let _ = writeln!(out, "{TOOL} {VERSION} {}", self.subcommand);
                let _ = writeln!(out, "fingerprint {}", self.fingerprint);
                for line in self.params.lines() {
                    let _ = writeln!(out, "  {line}");
                }
                for s in &self.sections {
                    out.push('\n');
                    s.render(&mut out);
                }
                out.push('\n');
                let _ = writeln!(
                    out,
                    "{}{}",
                    if self.fatal { "FAIL " } else { "" },
                    self.verdict
                );
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fingerprint_is_sha256_hex() {
        assert_eq!(
            fingerprint(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn renders_records_and_tables() {
        let mut r = RunReport::new("demo", "p=2".into());
        r.push(Record::new("count").with("n", 3).with("name", "x"));
        let mut s = Section::new("counts", &["name", "n"]);
        s.row(vec!["x".into(), "3".into()]);
        r.section(s);
        r.verdict = "ok".into();
        let lines: Vec<String> = r
            .render(Format::Records)
            .lines()
            .map(String::from)
            .collect();
        assert_eq!(lines.len(), 3);
        let v: Value = serde_json::from_str(&lines[1]).unwrap();
        assert_eq!(v["kind"], "count");
        assert_eq!(v["n"], 3);
        let table = r.render(Format::Table);
        assert!(table.contains("== counts\nname  n\nx     3\n"));
        assert!(table.ends_with("ok\n"));
        assert_eq!(r.render(Format::Table), table);
    }
}
