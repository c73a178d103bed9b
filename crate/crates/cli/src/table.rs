//! Value tables over a range of star sizes.

use std::fmt::Write as _;

use starcolor::{classify_only, CaseTag, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub value: usize,
    pub case: CaseTag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
}

pub const CSV_HEADER: &str = "n,value,case";

/// Classifier values for `n = from..=to`; the caller rejects empty ranges.
pub fn table_rows(t: usize, s: usize, from: usize, to: usize) -> Result<Vec<TableRow>> {
    (from..=to)
        .map(|n| {
            let v = classify_only(n, t, s)?;
            Ok(TableRow {
                n,
                value: v.value,
                case: v.tag,
            })
        })
        .collect()
}

pub fn render(rows: &[TableRow], format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            writeln!(out, "{CSV_HEADER}").unwrap();
            for r in rows {
                writeln!(out, "{},{},{}", r.n, r.value, r.case).unwrap();
            }
        }
        TableFormat::Text => {
            writeln!(out, "{:>6}  {:>8}  case", "n", "R").unwrap();
            for r in rows {
                writeln!(out, "{:>6}  {:>8}  {}", r.n, r.value, r.case).unwrap();
            }
        }
    }
    out
}
