use csv::{ReaderBuilder, StringRecord, Trim};

use crate::decision::{ParameterMatrix, ReciprocityPolicy, SaatyMatrix};
use crate::error::{Error, Result};
use crate::ns::ParameterSet;

fn line_of(record: &StringRecord) -> u64 {
    record.position().map_or(0, |p| p.line())
}

fn parse_number(text: &str) -> Option<f64> {
    text.parse::<f64>().ok().filter(|v| v.is_finite())
}

/// A decimal or a fraction literal `a/b`.
pub fn parse_entry(text: &str) -> std::result::Result<f64, String> {
    match text.split_once('/') {
        Some((a, b)) => {
            let (a, b) = (
                parse_number(a.trim()).ok_or_else(|| format!("bad numerator in `{text}`"))?,
                parse_number(b.trim()).ok_or_else(|| format!("bad denominator in `{text}`"))?,
            );
            if b == 0.0 {
                return Err(format!("zero denominator in `{text}`"));
            }
            Ok(a / b)
        }
        None => parse_number(text).ok_or_else(|| format!("`{text}` is not a number")),
    }
}

fn parse_grid(text: &str) -> Result<(ParameterSet, Vec<Vec<f64>>)> {
    let mut reader = ReaderBuilder::new()
        .has_headers(false)
        .trim(Trim::All)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let header = match records.next() {
        Some(r) => r.map_err(csv_error)?,
        None => return Err(Error::parse("line 1", "missing header row")),
    };
    let header_line = format!("line {}", line_of(&header));
    let params = ParameterSet::new(header.iter().map(str::to_owned))
        .map_err(|e| Error::validation(&header_line, e))?;
    let n = params.len();
    let mut rows = Vec::with_capacity(n);
    for record in records {
        let record = record.map_err(csv_error)?;
        let locus = format!("line {}", line_of(&record));
        if rows.len() == n {
            return Err(Error::validation(locus, format!("more than {n} rows")));
        }
        if record.len() != n {
            return Err(Error::validation(
                locus,
                format!("{} entries, expected {n}", record.len()),
            ));
        }
        let row = record
            .iter()
            .enumerate()
            .map(|(j, s)| {
                parse_entry(s).map_err(|m| Error::parse(format!("{locus}, column {}", j + 1), m))
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::validation(
            "end of input",
            format!("{} rows, expected {n}", rows.len()),
        ));
    }
    Ok((params, rows))
}

fn csv_error(e: csv::Error) -> Error {
    let locus = e
        .position()
        .map_or_else(|| "input".to_owned(), |p| format!("line {}", p.line()));
    Error::parse(locus, e.to_string())
}

fn matrix_error(e: Error) -> Error {
    match e {
        Error::InvalidMatrix(m) => Error::validation("matrix", m),
        other => other,
    }
}

/// Parses a comparison grid: a header row of parameter ids, then one row
/// per parameter in header order.
pub fn parse_saaty(text: &str, policy: ReciprocityPolicy) -> Result<SaatyMatrix> {
    let (params, rows) = parse_grid(text)?;
    SaatyMatrix::new(params, rows, policy).map_err(matrix_error)
}

/// Same grid format without the scale checks.
pub fn parse_parameter_matrix(text: &str) -> Result<ParameterMatrix> {
    let (params, rows) = parse_grid(text)?;
    ParameterMatrix::new(params, rows).map_err(matrix_error)
}
