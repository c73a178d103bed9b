//! The plain-text coloring format.
//!
//! ```text
//! # optional comments
//! p t
//! u v c        (one line per edge, 1 <= u < v <= p, 1 <= c <= t)
//! ```
//!
//! Fields are separated by single spaces and every line ends with `\n`.
//! Lines starting with `#` are ignored. Edges are written in lexicographic
//! order, so equal colorings serialize to identical bytes.

use std::fmt::Write as _;

use starcolor::verify::{validate, Defect, RawColoring, RawEntry};
use starcolor::EdgeColoring;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line \"p t\"")]
    MissingHeader,
    #[error("{}", render_defects(.0))]
    Invalid(Vec<Defect>),
}

impl FormatError {
    /// Line number of the first problem, when one is known.
    pub fn line(&self) -> Option<usize> {
        match self {
            FormatError::Syntax { line, .. } => Some(*line),
            FormatError::MissingHeader => None,
            FormatError::Invalid(defects) => defects.iter().find_map(|d| d.line()),
        }
    }
}

fn render_defects(defects: &[Defect]) -> String {
    defects
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

fn fields(line: &str, lineno: usize, want: usize) -> Result<Vec<usize>, FormatError> {
    let parts: Vec<&str> = line.split(' ').collect();
    if parts.len() != want || parts.iter().any(|p| p.is_empty()) {
        return Err(FormatError::Syntax {
            line: lineno,
            message: format!("expected {want} fields separated by single spaces"),
        });
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<usize>().map_err(|_| FormatError::Syntax {
                line: lineno,
                message: format!("not a non-negative integer: {p:?}"),
            })
        })
        .collect()
}

/// Reads the header and edge lines without checking completeness.
pub fn parse_raw(text: &str) -> Result<RawColoring, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let f = fields(line, lineno, 2)?;
                header = Some((f[0], f[1]));
            }
            Some(_) => {
                let f = fields(line, lineno, 3)?;
                entries.push(RawEntry {
                    u: f[0],
                    v: f[1],
                    color: f[2],
                    line: Some(lineno),
                });
            }
        }
    }
    let (order, num_colors) = header.ok_or(FormatError::MissingHeader)?;
    Ok(RawColoring {
        order,
        num_colors,
        entries,
    })
}

/// Parses and validates: duplicates, gaps and range violations are errors.
pub fn parse(text: &str) -> Result<EdgeColoring, FormatError> {
    let raw = parse_raw(text)?;
    validate(&raw).map_err(FormatError::Invalid)
}

pub fn serialize(coloring: &EdgeColoring) -> String {
    let mut out = String::with_capacity(16 + coloring.colors().len() * 8);
    writeln!(out, "{} {}", coloring.order(), coloring.num_colors()).unwrap();
    for (e, c) in coloring.edges() {
        writeln!(out, "{} {} {}", e.u().index(), e.v().index(), c).unwrap();
    }
    out
}

/// `serialize` with leading `#` comment lines.
pub fn serialize_with_comments(coloring: &EdgeColoring, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    out.push_str(&serialize(coloring));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const K3: &str = "# triangle\n3 2\n1 2 1\n1 3 2\n2 3 1\n";

    #[test]
    fn parses_small_file() {
        let c = parse(K3).unwrap();
        assert_eq!(c.order(), 3);
        assert_eq!(c.colors(), &[1, 2, 1]);
        assert_eq!(serialize(&c), K3.trim_start_matches("# triangle\n"));
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse("3 2\n1 2 1\n1 3  2\n2 3 1\n").unwrap_err();
        assert_eq!(err.line(), Some(3));

        let err = parse("3 2\n1 2 1\n1 3 7\n2 3 1\n").unwrap_err();
        assert_eq!(err.line(), Some(3));
        assert!(err.to_string().contains("color out of range"));

        let err = parse("3 2\n1 2 1\n1 2 2\n2 3 1\n").unwrap_err();
        assert_eq!(err.line(), Some(3));
        assert!(err.to_string().contains("missing edge {1,3}"));

        let err = parse("3 2\n2 1 1\n1 3 2\n2 3 1\n").unwrap_err();
        assert_eq!(err.line(), Some(2));

        assert_eq!(
            parse("# only a comment\n").unwrap_err(),
            FormatError::MissingHeader
        );
        assert!(parse("3 x\n").is_err());
    }

    #[test]
    fn empty_graphs() {
        let c = parse("1 4\n").unwrap();
        assert_eq!(c.order(), 1);
        assert_eq!(serialize(&c), "1 4\n");
    }
}
