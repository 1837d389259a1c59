//! Strict helpers shared by every line-oriented text format.

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct FormatError(String);

impl FormatError {
    pub fn new(msg: impl Into<String>) -> Self {
        FormatError(msg.into())
    }
}

/// Parses a canonical base-10 integer: optional `-`, no `+`, no leading
/// zeros except `0` itself, no `-0`.
pub fn parse_int(s: &str) -> Result<BigInt, FormatError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    let canonical = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'))
        && !(s.starts_with('-') && digits == "0");
    if !canonical {
        return Err(FormatError::new(format!("not a canonical integer: `{s}`")));
    }
    s.parse()
        .map_err(|_| FormatError::new(format!("not a canonical integer: `{s}`")))
}

pub fn parse_uint(s: &str) -> Result<BigUint, FormatError> {
    parse_int(s)?
        .to_biguint()
        .ok_or_else(|| FormatError::new(format!("expected a non-negative integer: `{s}`")))
}

pub fn parse_usize(s: &str) -> Result<usize, FormatError> {
    parse_int(s)?
        .try_into()
        .map_err(|_| FormatError::new(format!("expected a small non-negative integer: `{s}`")))
}

/// Splits a text body into lines, requiring a trailing newline on the last
/// line and rejecting trailing whitespace and `\r`.
pub fn strict_lines(text: &str) -> Result<Vec<&str>, FormatError> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let body = text
        .strip_suffix('\n')
        .ok_or_else(|| FormatError::new("missing final newline"))?;
    let lines: Vec<&str> = body.split('\n').collect();
    for (i, line) in lines.iter().enumerate() {
        if line.ends_with(|c: char| c.is_whitespace()) || line.contains('\r') {
            return Err(FormatError::new(format!("line {}: trailing whitespace", i + 1)));
        }
    }
    Ok(lines)
}

/// Reads a headed record of exactly `count` payload lines.
pub fn read_record<'a>(
    text: &'a str,
    header: &str,
    count: usize,
) -> Result<Vec<&'a str>, FormatError> {
    let lines = strict_lines(text)?;
    match lines.first() {
        Some(h) if *h == header => {}
        Some(h) => return Err(FormatError::new(format!("expected header `{header}`, found `{h}`"))),
        None => return Err(FormatError::new(format!("empty input, expected `{header}`"))),
    }
    if lines.len() != count + 1 {
        return Err(FormatError::new(format!(
            "`{header}` expects {count} lines, found {}",
            lines.len() - 1
        )));
    }
    Ok(lines[1..].to_vec())
}

pub fn write_record<I, S>(header: &str, lines: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut out = String::from(header);
    out.push('\n');
    for l in lines {
        out.push_str(l.as_ref());
        out.push('\n');
    }
    out
}
