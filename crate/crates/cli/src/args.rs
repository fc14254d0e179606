//! Parsers for the literal formats accepted on the command line.

use std::path::Path;

use qbern::numeric::{parse_exact, parse_rational};
use qbern::Rational;

use crate::error::{CliError, CliResult};

/// clap value parser for `a/b` literals.
pub fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// `start:end:step`, inclusive of `end` up to rounding.
pub fn parse_grid(s: &str) -> CliResult<Vec<f64>> {
    let bad = || CliError::Usage(format!("grid must be start:end:step, got `{s}`"));
    let parts: Vec<f64> = s
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<CliResult<_>>()?;
    let [start, end, step] = parts[..] else {
        return Err(bad());
    };
    if !(step > 0.0 && step.is_finite() && start.is_finite() && end.is_finite()) || end < start {
        return Err(bad());
    }
    let count = ((end - start) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| start + i as f64 * step).collect())
}

/// `t^m`, `t` or `1`, returning the exponent.
pub fn parse_monomial(s: &str) -> CliResult<u32> {
    let t = s.trim();
    match t {
        "1" => Ok(0),
        "t" => Ok(1),
        _ => t
            .strip_prefix("t^")
            .and_then(|m| m.parse::<u32>().ok())
            .ok_or_else(|| CliError::Usage(format!("--f must look like t^m, got `{s}`"))),
    }
}

/// Reads `k, f(k/n)` rows. A non-numeric first row is treated as a header.
/// Indices must run `0, 1, ..., n` in order.
pub fn read_samples(path: &Path) -> CliResult<Vec<Rational>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path)?;
    let mut values = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record?;
        if record.len() != 2 {
            return Err(CliError::Usage(format!("samples row {row}: expected `k,value`")));
        }
        let Ok(k) = record[0].parse::<usize>() else {
            if row == 0 {
                continue;
            }
            return Err(CliError::Usage(format!("samples row {row}: bad index `{}`", &record[0])));
        };
        if k != values.len() {
            return Err(CliError::Usage(format!("samples must list k = 0, 1, ... in order; got k = {k}")));
        }
        let value = parse_exact(&record[1])
            .map_err(|e| CliError::Usage(format!("samples row {row}: {e}")))?;
        values.push(value);
    }
    if values.is_empty() {
        return Err(CliError::Usage("samples file has no rows".into()));
    }
    Ok(values)
}
