//! Plain-text formats for instances, fuzzy subsets and crisp subsets.
//!
//! Instance files start with `n m`, followed by `m` blocks of `n` rows of `n`
//! integers; block `γ`, row `x`, column `y` holds `x γ y`. `#` starts a
//! comment that runs to the end of the line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::grade::Grade;
use crate::semigroup::{GammaSemigroup, TableData, MAX_CARRIER};
use crate::subset::ElementSubset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} table entries, found {found}")]
    Count { expected: usize, found: usize },
    #[error("entry {value} at γ={gamma}, x={x}, y={y} is outside 0..{n}")]
    OutOfRange { gamma: usize, x: usize, y: usize, value: usize, n: usize },
    #[error("expected {expected} grades, found {found}")]
    GradeCount { expected: usize, found: usize },
    #[error("invalid grade `{0}`")]
    Grade(String),
    #[error("invalid subset `{0}`")]
    Subset(String),
    #[error("element {element} outside carrier of size {n}")]
    Element { element: usize, n: usize },
}

/// Whitespace-separated tokens with their 1-based line numbers, comments removed.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().flat_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        body.split_whitespace().map(move |t| (i + 1, t))
    })
}

fn number(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError::Syntax { line, message: format!("`{tok}` is not a non-negative integer") })
}

/// Parses the table without checking associativity.
pub fn parse_table(text: &str) -> Result<TableData, ParseError> {
    let mut toks = tokens(text);
    let (line, first) = toks.next().ok_or(ParseError::MissingHeader)?;
    let n = number(line, first)?;
    let (line, second) = toks.next().ok_or(ParseError::MissingHeader)?;
    let m = number(line, second)?;
    if n == 0 || m == 0 || n > MAX_CARRIER || n.saturating_mul(n).saturating_mul(m) > 1 << 24 {
        return Err(ParseError::Syntax { line, message: format!("unsupported dimensions {n} {m}") });
    }
    let expected = n * n * m;
    let entries = toks.map(|(line, t)| number(line, t)).collect::<Result<Vec<_>, _>>()?;
    if entries.len() != expected {
        return Err(ParseError::Count { expected, found: entries.len() });
    }
    if let Some(i) = entries.iter().position(|&v| v >= n) {
        return Err(ParseError::OutOfRange { gamma: i / (n * n), x: (i / n) % n, y: i % n, value: entries[i], n });
    }
    let slices = entries.chunks(n * n).map(|s| s.chunks(n).map(<[usize]>::to_vec).collect()).collect();
    Ok(TableData { n, m, slices })
}

/// Canonical rendering: header, then blocks separated by blank lines.
pub fn emit_table(g: &GammaSemigroup) -> String {
    let (n, m) = (g.n(), g.m());
    let mut out = format!("{n} {m}\n");
    for c in 0..m {
        if c > 0 {
            out.push('\n');
        }
        for x in 0..n {
            let row: Vec<String> = (0..n).map(|y| g.op(x, c, y).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out
}

pub fn parse_grades(text: &str, n: usize) -> Result<Vec<Grade>, ParseError> {
    let grades = tokens(text)
        .map(|(_, t)| t.parse::<Grade>().map_err(|_| ParseError::Grade(t.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    if grades.len() != n {
        return Err(ParseError::GradeCount { expected: n, found: grades.len() });
    }
    Ok(grades)
}

/// Accepts `0,2`, `{0,2}` and `{}`.
pub fn parse_subset(g: &GammaSemigroup, text: &str) -> Result<ElementSubset, ParseError> {
    let t = text.trim();
    let inner = t.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(t);
    let mut elements = Vec::new();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let e: usize = part.parse().map_err(|_| ParseError::Subset(text.to_string()))?;
        if e >= g.n() {
            return Err(ParseError::Element { element: e, n: g.n() });
        }
        elements.push(e);
    }
    Ok(g.subset(&elements))
}
