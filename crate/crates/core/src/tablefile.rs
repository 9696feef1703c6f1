//! Plain-text Cayley tables.
//!
//! ```text
//! # optional comments
//! 4
//! 0 0 2 2
//! 1 0 2 2
//! 2 2 0 0
//! 3 3 1 0
//! ```
//!
//! The first data line is the order `n`, followed by `n` rows of `n`
//! whitespace-separated entries; row `x` lists `x*0 .. x*(n-1)`. Blank
//! lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::table::{CayleyTable, MAX_ORDER};

pub fn parse_table(text: &str) -> Result<CayleyTable> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "empty table file".into(),
    })?;
    let n: usize = header
        .parse()
        .ok()
        .filter(|&n| (1..=MAX_ORDER).contains(&n))
        .ok_or_else(|| Error::Parse {
            line: header_line,
            message: format!("expected the order (1..={MAX_ORDER}), found `{header}`"),
        })?;
    let mut cells = Vec::with_capacity(n * n);
    let mut last_line = header_line;
    for row in 0..n {
        let (lineno, line) = lines.next().ok_or_else(|| Error::Parse {
            line: last_line,
            message: format!("expected {n} rows, found {row}"),
        })?;
        last_line = lineno;
        let err = |message: String| Error::Parse { line: lineno, message };
        let entries = line
            .split_whitespace()
            .map(|v| v.parse::<usize>().map_err(|_| err(format!("`{v}` is not an element"))))
            .collect::<Result<Vec<_>>>()?;
        if entries.len() != n {
            return Err(err(format!("row {row} has {} entries, expected {n}", entries.len())));
        }
        if let Some(v) = entries.iter().find(|&&v| v >= n) {
            return Err(err(format!("entry {v} is outside 0..{n}")));
        }
        cells.extend(entries);
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lineno,
            message: format!("unexpected data after {n} rows"),
        });
    }
    CayleyTable::new(n, &cells)
}

pub fn format_table(t: &CayleyTable) -> String {
    let mut out = format!("{}\n", t.order());
    for x in t.elements() {
        let row: Vec<String> = t.row(x).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_table_file(path: impl AsRef<std::path::Path>) -> Result<CayleyTable> {
    parse_table(&std::fs::read_to_string(path)?)
}
