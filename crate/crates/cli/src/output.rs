use std::fmt;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use serde_json::Value;

use crate::{FormatArg, EXIT_INTERNAL, EXIT_USAGE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Table {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// What a command produced: the JSON report, an optional table for the
/// csv and text renderings, and the exit code.
pub struct Report {
    pub json: Value,
    pub table: Option<Table>,
    pub code: u8,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(scb_core::Error),
}

impl CliError {
    pub fn code(&self) -> u8 {
        use scb_core::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(
                E::Parse { .. }
                | E::UnknownMethod { .. }
                | E::MalformedMethod(_)
                | E::InvalidMethod(_)
                | E::NonPositiveGamma
                | E::PrecisionTooLow { .. }
                | E::ZeroDenominator
                | E::Json(_)
                | E::Io(_),
            ) => EXIT_USAGE,
            CliError::Core(_) => EXIT_INTERNAL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => f.write_str(s),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<scb_core::Error> for CliError {
    fn from(e: scb_core::Error) -> CliError {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn emit(report: &Report, fmt: Format, path: Option<&Path>) -> io::Result<()> {
    let mut out: Box<dyn Write> = match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    };
    match fmt {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &report.json)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let table = report.table.clone().unwrap_or_else(|| flatten(&report.json));
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(&table.header)?;
            for r in &table.rows {
                w.write_record(r)?;
            }
            w.flush()?;
        }
        Format::Text => {
            let table = report.table.clone().unwrap_or_else(|| flatten(&report.json));
            write_text(&mut out, &table)?;
        }
    }
    out.flush()
}

/// Scalar fields of a report as `key,value` rows, nested keys joined by `.`.
pub fn flatten(v: &Value) -> Table {
    fn walk(prefix: &str, v: &Value, t: &mut Table) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, x, t);
                }
            }
            Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
                let items: Vec<String> = a.iter().map(scalar).collect();
                t.push(vec![prefix.to_string(), items.join(" ")]);
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    walk(&format!("{prefix}.{i}"), x, t);
                }
            }
            _ => t.push(vec![prefix.to_string(), scalar(v)]),
        }
    }
    let mut t = Table::new(&["key", "value"]);
    walk("", v, &mut t);
    t
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn write_text(out: &mut dyn Write, t: &Table) -> io::Result<()> {
    let mut widths: Vec<usize> = t.header.iter().map(|h| h.len()).collect();
    for r in &t.rows {
        for (i, c) in r.iter().enumerate() {
            if i < widths.len() {
                widths[i] = widths[i].max(c.chars().count().min(60));
            }
        }
    }
    let line = |cells: &[String]| {
        let parts: Vec<String> = cells.iter().enumerate().map(|(i, c)| format!("{c:<w$}", w = widths[i])).collect();
        parts.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(&t.header))?;
    for r in &t.rows {
        writeln!(out, "{}", line(r))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flatten_nests_keys() {
        let t = flatten(&json!({"a": 1, "b": {"c": "x", "d": [1, 2]}}));
        assert_eq!(t.rows, vec![vec!["a", "1"], vec!["b.c", "x"], vec!["b.d", "1 2"]]);
    }
}
