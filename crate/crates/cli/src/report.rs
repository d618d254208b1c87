//! Tables and their CSV / JSON encodings.

use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(u64),
    Real(f64),
    Flag(bool),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Flag(v)
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

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Real)
    }
}

/// Shortest decimal that parses back to the same `f64`, switching to
/// exponent form for very large or very small magnitudes.
pub fn format_real(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || !x.is_finite() || (1e-4..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Real(x) => format_real(*x),
            Cell::Flag(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(n) => Value::from(*n),
            Cell::Real(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Flag(b) => Value::Bool(*b),
            Cell::Empty => Value::Null,
        }
    }
}

/// One row of a reproduction table: a computed value against its reference.
/// `abs_error` is not stored; it is recomputed whenever the row is emitted.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub label: String,
    pub n_or_l: u64,
    pub value: f64,
    pub reference: f64,
    pub bound: Option<f64>,
    pub extra: Vec<(&'static str, Cell)>,
}

impl ReportRow {
    pub fn new(label: impl Into<String>, n_or_l: u64, value: f64, reference: f64) -> Self {
        Self {
            label: label.into(),
            n_or_l,
            value,
            reference,
            bound: None,
            extra: Vec::new(),
        }
    }

    pub fn bound(mut self, bound: f64) -> Self {
        self.bound = Some(bound);
        self
    }

    pub fn with(mut self, name: &'static str, cell: impl Into<Cell>) -> Self {
        self.extra.push((name, cell.into()));
        self
    }

    pub fn abs_error(&self) -> f64 {
        (self.value - self.reference).abs()
    }

    /// `abs_error < bound`, or true when there is no bound.
    pub fn within_bound(&self) -> bool {
        self.bound.is_none_or(|b| self.abs_error() < b)
    }
}

/// A rectangular table with named columns.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Builds a table from report rows; extra columns follow the fixed ones
    /// in the order of the first row.
    pub fn from_report(rows: &[ReportRow]) -> Self {
        let mut columns = vec!["label", "n_or_l", "value", "reference", "abs_error", "bound"];
        if let Some(first) = rows.first() {
            columns.extend(first.extra.iter().map(|(name, _)| *name));
        }
        let mut table = Self::new(columns);
        for r in rows {
            let mut cells = vec![
                Cell::from(r.label.as_str()),
                Cell::Int(r.n_or_l),
                Cell::Real(r.value),
                Cell::Real(r.reference),
                Cell::Real(r.abs_error()),
                Cell::from(r.bound),
            ];
            cells.extend(r.extra.iter().map(|(_, c)| c.clone()));
            table.push(cells);
        }
        table
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::csv))?;
                }
                w.flush()?;
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .columns
                            .iter()
                            .zip(row)
                            .map(|(k, v)| (k.to_string(), v.json()))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut *out, &rows)?;
                writeln!(out)?;
            }
        }
        Ok(())
    }
}
