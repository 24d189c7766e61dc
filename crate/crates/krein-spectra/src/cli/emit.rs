//! CSV and JSON rendering of result tables.

use std::io::{self, Write};

use serde_json::{Map, Number, Value};

/// JSON schema version written into every object.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            // Debug prints the shortest string that reads back to the same f64
            Cell::Float(v) => format!("{v:?}"),
            Cell::Text(s) => quote_csv(s),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => Number::from_f64(*v).map(Value::Number).unwrap_or_else(|| Value::String(format!("{v:?}"))),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v.into())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

fn quote_csv(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// A named table: the result of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub command: String,
    pub model: Option<String>,
    pub extension: Option<String>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: &str, columns: &[&'static str]) -> Self {
        Table { command: command.to_owned(), model: None, extension: None, columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_json_value(&self) -> Value {
        let data = self
            .rows
            .iter()
            .map(|row| Value::Object(self.columns.iter().zip(row).map(|(c, v)| (c.to_string(), v.json())).collect()))
            .collect();
        let mut obj = Map::new();
        obj.insert("schema_version".into(), SCHEMA_VERSION.into());
        obj.insert("command".into(), self.command.clone().into());
        let opt = |v: &Option<String>| v.clone().map(Value::String).unwrap_or(Value::Null);
        obj.insert("model".into(), opt(&self.model));
        obj.insert("extension".into(), opt(&self.extension));
        obj.insert("data".into(), Value::Array(data));
        Value::Object(obj)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub fn to_csv(table: &Table) -> String {
    let mut out = table.columns.join(",");
    out.push('\n');
    for row in &table.rows {
        let line: Vec<String> = row.iter().map(Cell::csv).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(table: &Table) -> String {
    let mut s = table.to_json_value().to_string();
    s.push('\n');
    s
}

/// Parses emitted JSON and writes it again.
pub fn reemit_json(text: &str) -> serde_json::Result<String> {
    let value: Value = serde_json::from_str(text)?;
    let mut s = value.to_string();
    s.push('\n');
    Ok(s)
}

pub fn emit(table: &Table, format: Format, mut out: impl Write) -> io::Result<()> {
    let text = match format {
        Format::Csv => to_csv(table),
        Format::Json => to_json(table),
    };
    out.write_all(text.as_bytes())?;
    out.flush()
}
