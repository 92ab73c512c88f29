//! The `binary-matroid v1` text format.
//!
//! ```text
//! # binary-matroid v1
//! rows 3 cols 7
//! 1010101
//! 0110011
//! 0001111
//! labels e0 e1 e2 e3 e4 e5 e6
//! ```
//!
//! The `labels` line is optional; without it elements are named
//! `e0..e{n-1}`. Rendering omits the line when the labels are exactly
//! those defaults, so `parse(render(m)) == m` and rendering is
//! byte-stable.

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::matroid::BinaryMatroid;
use std::fmt::Write as _;

pub const HEADER: &str = "# binary-matroid v1";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the text format. Strict: exact header, matching dimensions,
/// only `0`/`1` entries, distinct labels, nothing but blank lines
/// after the body.
pub fn parse_matroid(text: &str) -> Result<BinaryMatroid> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_error(1, "empty input"))?;
    if header.trim_end() != HEADER {
        return Err(parse_error(1, format!("expected header `{HEADER}`")));
    }
    let (_, dims) = lines
        .next()
        .ok_or_else(|| parse_error(2, "missing `rows R cols N` line"))?;
    let fields: Vec<&str> = dims.split_whitespace().collect();
    let (rows, cols) = match fields.as_slice() {
        ["rows", r, "cols", n] => (
            r.parse::<usize>()
                .map_err(|_| parse_error(2, format!("bad row count `{r}`")))?,
            n.parse::<usize>()
                .map_err(|_| parse_error(2, format!("bad column count `{n}`")))?,
        ),
        _ => return Err(parse_error(2, "expected `rows R cols N`")),
    };
    let mut matrix = BitMatrix::zeros(rows, cols)?;
    for i in 0..rows {
        let (lineno, row) = lines
            .next()
            .ok_or_else(|| parse_error(2 + rows, format!("missing matrix row {i}")))?;
        if row.chars().count() != cols {
            return Err(parse_error(
                lineno + 1,
                format!(
                    "row has {} characters, expected {cols}",
                    row.chars().count()
                ),
            ));
        }
        for (j, ch) in row.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => matrix.set(i, j, true),
                other => {
                    return Err(parse_error(
                        lineno + 1,
                        format!("unexpected character `{other}`; entries are 0 or 1"),
                    ))
                }
            }
        }
    }
    let mut labels: Option<Vec<String>> = None;
    for (lineno, rest) in lines {
        if rest.trim().is_empty() {
            continue;
        }
        let mut fields = rest.split_whitespace();
        match fields.next() {
            Some("labels") if labels.is_none() => {
                let given: Vec<String> = fields.map(String::from).collect();
                if given.len() != cols {
                    return Err(parse_error(
                        lineno + 1,
                        format!("{} labels for {cols} columns", given.len()),
                    ));
                }
                labels = Some(given);
            }
            _ => {
                return Err(parse_error(
                    lineno + 1,
                    "unexpected content after the matrix",
                ))
            }
        }
    }
    match labels {
        Some(l) => BinaryMatroid::new(matrix, l).map_err(|e| match e {
            Error::DuplicateLabel(l) => parse_error(0, format!("duplicate label `{l}`")),
            other => other,
        }),
        None => Ok(BinaryMatroid::with_default_labels(matrix)),
    }
}

/// Renders the text format; inverse of [`parse_matroid`].
pub fn render_matroid(m: &BinaryMatroid) -> String {
    let matrix = m.matrix();
    let mut out = String::new();
    let _ = writeln!(out, "{HEADER}");
    let _ = writeln!(out, "rows {} cols {}", matrix.rows(), matrix.cols());
    for i in 0..matrix.rows() {
        for j in 0..matrix.cols() {
            out.push(if matrix.get(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    let default_labels = (0..m.size()).all(|j| m.label(j) == format!("e{j}"));
    if !default_labels {
        out.push_str("labels");
        for l in m.labels() {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, CatalogId};

    #[test]
    fn round_trip_catalog() {
        for name in ["f7", "mk5", "mk33dual", "ag32", "wheel4", "section6-m"] {
            let m = catalog(&CatalogId::parse(name).unwrap()).unwrap();
            let text = render_matroid(&m);
            let back = parse_matroid(&text).unwrap();
            assert_eq!(back, m, "{name}");
            assert_eq!(render_matroid(&back), text, "{name}");
        }
    }

    #[test]
    fn default_labels_are_omitted() {
        let text = render_matroid(&catalog(&CatalogId::F7).unwrap());
        assert!(!text.contains("labels"));
        let text = render_matroid(&catalog(&CatalogId::MK4).unwrap());
        assert!(text.contains("labels 12 13 14 23 24 34"));
    }

    #[test]
    fn rejects_bad_header() {
        assert!(matches!(
            parse_matroid("# wrong\nrows 1 cols 1\n1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_matroid(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn rejects_dimension_mismatches() {
        let text = format!("{HEADER}\nrows 2 cols 3\n101\n10\n");
        assert!(matches!(
            parse_matroid(&text),
            Err(Error::Parse { line: 4, .. })
        ));
        let text = format!("{HEADER}\nrows 2 cols 3\n101\n");
        assert!(parse_matroid(&text).is_err());
    }

    #[test]
    fn rejects_bad_entries_and_labels() {
        let text = format!("{HEADER}\nrows 1 cols 3\n1x1\n");
        assert!(matches!(
            parse_matroid(&text),
            Err(Error::Parse { line: 3, .. })
        ));
        let text = format!("{HEADER}\nrows 1 cols 2\n11\nlabels a a\n");
        assert!(parse_matroid(&text).is_err());
        let text = format!("{HEADER}\nrows 1 cols 2\n11\nlabels a\n");
        assert!(matches!(
            parse_matroid(&text),
            Err(Error::Parse { line: 4, .. })
        ));
    }

    #[test]
    fn rejects_trailing_garbage() {
        let text = format!("{HEADER}\nrows 1 cols 2\n11\n\nextra\n");
        assert!(matches!(
            parse_matroid(&text),
            Err(Error::Parse { line: 5, .. })
        ));
    }

    #[test]
    fn oversized_matrices_are_capacity_errors() {
        let text = format!("{HEADER}\nrows 1 cols 65\n{}\n", "1".repeat(65));
        assert!(matches!(parse_matroid(&text), Err(Error::Capacity(_))));
    }

    #[test]
    fn crlf_input_parses() {
        let text = format!("{HEADER}\r\nrows 1 cols 2\r\n11\r\n");
        let m = parse_matroid(&text).unwrap();
        assert_eq!(m.size(), 2);
    }
}
