//! Output documents and their json / csv / human renderings.

use clap::ValueEnum;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Human,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Bool(bool),
    Missing,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as u64)
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Int(x)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_string())
    }
}

impl From<String> for Cell {
    fn from(x: String) -> Self {
        Cell::Text(x)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(x: Option<T>) -> Self {
        x.map_or(Cell::Missing, Into::into)
    }
}

/// Seventeen significant digits, enough to round-trip any f64. Negative
/// zero prints as zero.
pub fn sig17(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn human_number(x: f64) -> String {
    if x == 0.0 || (1e-4..1e7).contains(&x.abs()) {
        let s = format!("{x:.10}");
        let s = s.trim_end_matches('0');
        s.strip_suffix('.').unwrap_or(s).to_string()
    } else {
        format!("{x:.6e}")
    }
}

impl Cell {
    fn csv_text(&self) -> String {
        match self {
            Cell::Num(x) => sig17(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Missing => String::new(),
        }
    }

    fn human_text(&self) -> String {
        match self {
            Cell::Num(x) => human_number(*x),
            Cell::Missing => "-".into(),
            other => other.csv_text(),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Num(x) if x.is_finite() => {
                let raw = RawValue::from_string(sig17(*x)).map_err(serde::ser::Error::custom)?;
                raw.serialize(serializer)
            }
            Cell::Num(_) | Cell::Missing => serializer.serialize_none(),
            Cell::Int(n) => serializer.serialize_u64(*n),
            Cell::Text(s) => serializer.serialize_str(s),
            Cell::Bool(b) => serializer.serialize_bool(*b),
        }
    }
}

/// Ordered key/value record.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Record(pub Vec<(String, Cell)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Cell>) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<Cell>) {
        self.0.push((key.to_string(), value.into()));
    }

    #[cfg(test)]
    pub fn get(&self, key: &str) -> Option<&Cell> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

struct Rows<'a>(&'a [Record]);

impl Serialize for Rows<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for r in self.0 {
            seq.serialize_element(r)?;
        }
        seq.end()
    }
}

/// A summary record optionally followed by a list of rows under `rows_key`.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub summary: Record,
    pub rows_key: &'static str,
    pub rows: Vec<Record>,
}

impl Document {
    pub fn record(summary: Record) -> Self {
        Self { summary, rows_key: "rows", rows: Vec::new() }
    }

    pub fn with_rows(summary: Record, rows_key: &'static str, rows: Vec<Record>) -> Self {
        Self { summary, rows_key, rows }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Human => self.human(),
        }
    }

    fn json(&self) -> String {
        struct Full<'a>(&'a Document);
        impl Serialize for Full<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let doc = self.0;
                let extra = usize::from(!doc.rows.is_empty());
                let mut map = serializer.serialize_map(Some(doc.summary.0.len() + extra))?;
                for (k, v) in &doc.summary.0 {
                    map.serialize_entry(k, v)?;
                }
                if !doc.rows.is_empty() {
                    map.serialize_entry(doc.rows_key, &Rows(&doc.rows))?;
                }
                map.end()
            }
        }
        let mut out = serde_json::to_string_pretty(&Full(self)).expect("documents always serialize");
        out.push('\n');
        out
    }

    /// Rows when present, otherwise the summary as a single row.
    fn csv(&self) -> String {
        let records: Vec<&Record> = if self.rows.is_empty() {
            vec![&self.summary]
        } else {
            self.rows.iter().collect()
        };
        let mut writer = csv::Writer::from_writer(Vec::new());
        if let Some(first) = records.first() {
            writer
                .write_record(first.0.iter().map(|(k, _)| k.as_str()))
                .expect("in-memory write");
        }
        for r in records {
            writer
                .write_record(r.0.iter().map(|(_, v)| v.csv_text()))
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }

    fn human(&self) -> String {
        let width = self.summary.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.summary.0 {
            out.push_str(&format!("{k:<width$}  {}\n", v.human_text()));
        }
        if !self.rows.is_empty() {
            out.push_str(&format!("{}:\n", self.rows_key));
            for r in &self.rows {
                let line: Vec<String> = r.0.iter().map(|(k, v)| format!("{k}={}", v.human_text())).collect();
                out.push_str(&format!("  {}\n", line.join("  ")));
            }
        }
        out
    }
}
