//! Plain-text edge lists.
//!
//! ```text
//! n 5
//! # comment
//! 0 1 2
//! 1 2 4
//! ```
//!
//! Line 1 is the header. Every other line is blank, a `#` comment, or an
//! edge: three distinct ascending vertices below `n`, separated by single
//! spaces. Line endings are LF and the file is ASCII.

use std::collections::HashMap;

use thiserror::Error;
use triplesys::system::MAX_VERTICES;
use triplesys::{Triple, TripleSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// A decimal integer without sign or leading zeros.
fn parse_number(token: &str) -> Option<usize> {
    let canonical = !token.is_empty()
        && token.bytes().all(|b| b.is_ascii_digit())
        && (token == "0" || !token.starts_with('0'));
    if canonical {
        token.parse().ok()
    } else {
        None
    }
}

fn parse_header(line: &str) -> Result<usize, ParseError> {
    let Some(count) = line.strip_prefix("n ") else {
        return fail(1, format!("expected header `n <count>`, found {line:?}"));
    };
    match parse_number(count) {
        Some(n) if n <= MAX_VERTICES => Ok(n),
        Some(n) => fail(1, format!("{n} vertices exceed the limit of {MAX_VERTICES}")),
        None => fail(1, format!("vertex count {count:?} is not a non-negative integer")),
    }
}

fn parse_edge(line: &str, number: usize, n: usize) -> Result<Triple, ParseError> {
    let tokens: Vec<&str> = line.split(' ').collect();
    if tokens.len() != 3 {
        return fail(number, format!("expected three vertices separated by single spaces, found {line:?}"));
    }
    let mut edge = [0; 3];
    for (slot, token) in edge.iter_mut().zip(&tokens) {
        *slot = match parse_number(token) {
            Some(v) if v < n => v,
            Some(v) => return fail(number, format!("vertex {v} is outside 0..{n}")),
            None => return fail(number, format!("{token:?} is not a vertex index")),
        };
    }
    if !(edge[0] < edge[1] && edge[1] < edge[2]) {
        return fail(number, format!("vertices {edge:?} are not distinct and ascending"));
    }
    Ok(edge)
}

pub fn parse(text: &str) -> Result<TripleSystem, ParseError> {
    if let Some(pos) = text.bytes().position(|b| !b.is_ascii()) {
        let line = text[..pos].matches('\n').count() + 1;
        return fail(line, "non-ASCII byte");
    }
    if text.is_empty() {
        return fail(1, "missing header `n <count>`");
    }
    // A trailing newline terminates the last line rather than opening a new one.
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().expect("split yields at least one piece");
    if header.contains('\r') {
        return fail(1, "carriage return; line endings must be LF");
    }
    let n = parse_header(header)?;
    let mut first_seen: HashMap<Triple, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (number, line) in lines {
        if line.contains('\r') {
            return fail(number, "carriage return; line endings must be LF");
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let edge = parse_edge(line, number, n)?;
        if let Some(&earlier) = first_seen.get(&edge) {
            return fail(number, format!("duplicate edge {} {} {} (first on line {earlier})", edge[0], edge[1], edge[2]));
        }
        first_seen.insert(edge, number);
        edges.push(edge);
    }
    TripleSystem::new(n, edges).map_err(|e| ParseError {
        line: 1,
        message: e.to_string(),
    })
}

pub fn serialize(host: &TripleSystem) -> String {
    let mut out = format!("n {}\n", host.n());
    for [a, b, c] in host.edges() {
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}
