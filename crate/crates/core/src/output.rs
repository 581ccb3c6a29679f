//! CSV and line-delimited JSON record writers.
//!
//! Floats are written with 17 significant digits so every value round-trips
//! bit for bit. Missing values are empty CSV fields and JSON `null`.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format '{s}' (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Float(f64),
    Missing,
    Int(u64),
    Bool(bool),
    Str(String),
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<Option<f64>> for Value {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Value::Missing, Value::Float)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as u64)
    }
}

impl From<Option<usize>> for Value {
    fn from(v: Option<usize>) -> Self {
        v.map_or(Value::Missing, |n| Value::Int(n as u64))
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Str(v.to_owned())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Str(v)
    }
}

/// 17 significant digits in scientific notation.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "NaN".to_owned()
    } else if v > 0.0 {
        "inf".to_owned()
    } else {
        "-inf".to_owned()
    }
}

fn csv_field(v: &Value) -> String {
    match v {
        Value::Float(x) => format_float(*x),
        Value::Missing => String::new(),
        Value::Int(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Str(s) => {
            if s.contains([',', '"', '\n', '\r']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.clone()
            }
        }
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_value(v: &Value) -> String {
    match v {
        Value::Float(x) if x.is_finite() => format_float(*x),
        Value::Float(_) | Value::Missing => "null".to_owned(),
        Value::Int(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Str(s) => json_string(s),
    }
}

/// Writes records with a fixed column list.
pub struct RecordWriter<W: Write> {
    out: W,
    format: Format,
    columns: Vec<&'static str>,
    header_done: bool,
}

impl<W: Write> RecordWriter<W> {
    pub fn new(out: W, format: Format, columns: &[&'static str]) -> Self {
        RecordWriter {
            out,
            format,
            columns: columns.to_vec(),
            header_done: false,
        }
    }

    /// Emits the CSV header if it has not been written yet.
    pub fn header(&mut self) -> io::Result<()> {
        if self.format == Format::Csv && !self.header_done {
            writeln!(self.out, "{}", self.columns.join(","))?;
        }
        self.header_done = true;
        Ok(())
    }

    pub fn row(&mut self, values: &[Value]) -> io::Result<()> {
        assert_eq!(values.len(), self.columns.len(), "row width must match the header");
        self.header()?;
        match self.format {
            Format::Csv => {
                let fields: Vec<String> = values.iter().map(csv_field).collect();
                writeln!(self.out, "{}", fields.join(","))
            }
            Format::Json => {
                let fields: Vec<String> = self
                    .columns
                    .iter()
                    .zip(values)
                    .map(|(k, v)| format!("{}:{}", json_string(k), json_value(v)))
                    .collect();
                writeln!(self.out, "{{{}}}", fields.join(","))
            }
        }
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}
