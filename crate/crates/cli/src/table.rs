//! Row tables rendered as CSV (header row first) or as a JSON array of row
//! objects. Rationals are always written in canonical `a/b` form.

use qbern::bernstein::{basis_upoly, BernsteinIndex};
use qbern::euler::{euler_table, OracleLevel};
use qbern::numeric::format_rational;
use qbern::qcore::stirling2;
use qbern::stirling::q_stirling2;
use qbern::Rational;
use serde_json::{Map, Value};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Text(String),
    Float(f64),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Float(v) => format!("{v:e}"),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.clone()),
            Cell::Float(v) => Value::from(*v),
        }
    }
}

impl From<&Rational> for Cell {
    fn from(r: &Rational) -> Self {
        Cell::Text(format_rational(r))
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> CliResult<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::text))?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> CliResult<String> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), v.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&rows)?;
        out.push('\n');
        Ok(out)
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// What `emit_table` can produce.
#[derive(Debug, Clone, PartialEq)]
pub enum TableKind {
    /// `E_{0,q}..E_{nmax,q}`
    Euler { q: Rational, nmax: usize },
    /// Monomial coefficients of `B_{k,n}` in `u`.
    Bernstein { k: u64, n: u64 },
    /// `s(n,k)` (classical when `q` is `None`) for `0 <= k <= n <= nmax`.
    Stirling { nmax: u64, q: Option<Rational> },
}

pub fn build_table(kind: &TableKind) -> CliResult<Table> {
    match kind {
        TableKind::Euler { q, nmax } => {
            let values = euler_table(q, *nmax)?;
            let mut t = Table::new(vec!["n", "value"]);
            for (n, v) in values.values().iter().enumerate() {
                t.push(vec![Cell::Int(n as i64), v.into()]);
            }
            Ok(t)
        }
        TableKind::Bernstein { k, n } => {
            let poly = basis_upoly(BernsteinIndex::new(*k, *n));
            let mut t = Table::new(vec!["power", "coefficient"]);
            for (i, c) in poly.coeffs().iter().enumerate() {
                t.push(vec![Cell::Int(i as i64), c.into()]);
            }
            Ok(t)
        }
        TableKind::Stirling { nmax, q } => {
            let mut t = Table::new(vec!["n", "k", "value"]);
            for n in 0..=*nmax {
                for k in 0..=n {
                    let value = match q {
                        Some(q) => format_rational(&q_stirling2(n, k, q)?),
                        None => stirling2(n, k).to_string(),
                    };
                    t.push(vec![Cell::Int(n as i64), Cell::Int(k as i64), Cell::Text(value)]);
                }
            }
            Ok(t)
        }
    }
}

/// Deterministic byte output for a table kind.
pub fn emit_table(kind: &TableKind, format: Format) -> CliResult<String> {
    build_table(kind)?.render(format)
}

pub fn oracle_table(levels: &[OracleLevel]) -> Table {
    let mut t = Table::new(vec!["level", "sum", "valuation"]);
    for l in levels {
        t.push(vec![
            Cell::Int(l.level as i64),
            (&l.sum).into(),
            Cell::Text(l.valuation.to_string()),
        ]);
    }
    t
}
