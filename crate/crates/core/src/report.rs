//! Tabular output: CSV with 17 significant digits and JSON with a `meta` header.

use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::Result;

/// Formats `x` with 17 significant digits, enough to round-trip any f64.
pub fn fmt_sig17(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    format!("{x:.16e}")
}

/// One cell of a report table.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn csv_text(&self) -> String {
        match self {
            Cell::Num(x) => fmt_sig17(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            // JSON has no inf/NaN; those become strings
            Cell::Num(x) if x.is_finite() => json!(x),
            Cell::Num(x) => json!(fmt_sig17(*x)),
            Cell::Int(i) => json!(i),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

/// A header plus rows, written either as CSV or as JSON objects.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table { columns: columns.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns).map_err(csv_err)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv_text)).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn json_rows(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, cell) in self.columns.iter().zip(row) {
                    obj.insert(name.clone(), cell.json());
                }
                Value::Object(obj)
            })
            .collect()
    }
}

fn csv_err(e: csv::Error) -> crate::error::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => io.into(),
        other => std::io::Error::other(format!("{other:?}")).into(),
    }
}

/// Run metadata carried in every JSON report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub seed: u64,
    pub command_line: String,
}

impl Meta {
    pub fn new(seed: u64, command_line: impl Into<String>) -> Self {
        Meta { version: env!("CARGO_PKG_VERSION").to_string(), seed, command_line: command_line.into() }
    }
}

/// Writes `{"meta": ..., "rows": [...]}` followed by a newline.
pub fn write_json<W: Write>(mut out: W, meta: &Meta, rows: Vec<Value>) -> Result<()> {
    let doc = json!({ "meta": meta, "rows": rows });
    serde_json::to_writer_pretty(&mut out, &doc)?;
    writeln!(out)?;
    Ok(())
}

/// One checked inequality instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub check: String,
    pub inputs: String,
    pub point: f64,
    pub bound: f64,
    pub oracle: f64,
    pub margin: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl VerificationRecord {
    pub const COLUMNS: [&'static str; 8] =
        ["check", "inputs", "point", "bound", "oracle", "margin", "tolerance", "passed"];

    /// `margin` is signed so that nonnegative means the inequality holds.
    pub fn new(
        check: impl Into<String>,
        inputs: impl Into<String>,
        point: f64,
        bound: f64,
        oracle: f64,
        margin: f64,
        tolerance: f64,
    ) -> Self {
        VerificationRecord {
            check: check.into(),
            inputs: inputs.into(),
            point,
            bound,
            oracle,
            margin,
            tolerance,
            passed: margin >= -tolerance,
        }
    }

    /// Record for `bound ≤ oracle`.
    pub fn lower(check: impl Into<String>, inputs: impl Into<String>, point: f64, bound: f64, oracle: f64, tolerance: f64) -> Self {
        Self::new(check, inputs, point, bound, oracle, oracle - bound, tolerance)
    }

    /// Record for `oracle ≤ bound`.
    pub fn upper(check: impl Into<String>, inputs: impl Into<String>, point: f64, bound: f64, oracle: f64, tolerance: f64) -> Self {
        Self::new(check, inputs, point, bound, oracle, bound - oracle, tolerance)
    }

    pub fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Text(self.check.clone()),
            Cell::Text(self.inputs.clone()),
            Cell::Num(self.point),
            Cell::Num(self.bound),
            Cell::Num(self.oracle),
            Cell::Num(self.margin),
            Cell::Num(self.tolerance),
            Cell::Bool(self.passed),
        ]
    }
}

pub fn records_table(records: &[VerificationRecord]) -> Table {
    let mut t = Table::new(VerificationRecord::COLUMNS);
    for r in records {
        t.push(r.cells());
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for &x in &[0.0, 1.0, std::f64::consts::PI, 1e-300, -2.5e17, 0.1 + 0.2] {
            let s = fmt_sig17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
            let mantissa = s.trim_start_matches('-').split('e').next().unwrap();
            assert_eq!(mantissa.chars().filter(|c| c.is_ascii_digit()).count(), 17);
        }
        assert_eq!(fmt_sig17(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn csv_uses_lf_and_quotes_commas() {
        let mut t = Table::new(["name", "value"]);
        t.push(vec!["a,b".into(), 2.0.into()]);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(!s.contains('\r'));
        assert_eq!(s, "name,value\n\"a,b\",2.0000000000000000e0\n");
    }

    #[test]
    fn json_document_shape() {
        let rec = VerificationRecord::lower("laptev", "z=1", 1.0, 0.5, 1.0, 0.0);
        assert!(rec.passed);
        assert_eq!(rec.margin, 0.5);
        let t = records_table(&[rec]);
        let mut buf = Vec::new();
        write_json(&mut buf, &Meta::new(42, "verify"), t.json_rows()).unwrap();
        let v: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["meta"]["seed"], 42);
        assert_eq!(v["rows"][0]["check"], "laptev");
        assert_eq!(v["rows"][0]["passed"], true);
    }

    #[test]
    fn failing_record() {
        let rec = VerificationRecord::upper("berezin", "", 1.0, 1.0, 2.0, 1e-9);
        assert!(!rec.passed);
        assert_eq!(rec.margin, -1.0);
    }
}
