//! The `.nbx` text format: one string per line over `0`, `1`, `*`; lines
//! starting with `#` are comments and blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::strings::{StringError, TernaryString};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {source}")]
pub struct NbxError {
    pub line: usize,
    #[source]
    pub source: StringError,
}

/// Parses `.nbx` text into strings, in file order.
pub fn parse(text: &str) -> Result<Vec<TernaryString>, NbxError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(line.parse().map_err(|source| NbxError { line: n + 1, source })?);
    }
    Ok(out)
}

/// Writes strings one per line, each line newline-terminated.
pub fn format<'a>(strings: impl IntoIterator<Item = &'a TernaryString>) -> String {
    let mut out = String::new();
    for s in strings {
        writeln!(out, "{s}").unwrap();
    }
    out
}
