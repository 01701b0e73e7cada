//! Sequence ingestion: inline comma/whitespace lists and b-files
//! ("index value" lines, '#' comments, contiguous indices).

use std::fmt;
use std::path::Path;

use invar_core::{parse_poly, Rat, Sequence};

#[derive(Debug)]
pub struct IngestError {
    pub msg: String,
}

impl fmt::Display for IngestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.msg)
    }
}

impl std::error::Error for IngestError {}

fn fail<T>(msg: impl Into<String>) -> Result<T, IngestError> {
    Err(IngestError { msg: msg.into() })
}

fn parse_rat(text: &str) -> Result<Rat, IngestError> {
    parse_poly(text)
        .ok()
        .and_then(|p| p.as_constant())
        .map_or_else(|| fail(format!("'{text}' is not a rational number")), Ok)
}

/// Inline form: rationals separated by commas and/or whitespace.
pub fn parse_inline(text: &str) -> Result<Sequence, IngestError> {
    let terms: Vec<Rat> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(parse_rat)
        .collect::<Result<_, _>>()?;
    if terms.is_empty() {
        return fail("empty input");
    }
    Ok(Sequence::new(terms).expect("nonempty"))
}

/// b-file form: optional '#' comment lines, then "index value" pairs with
/// contiguous indices starting from the smallest present.
pub fn parse_bfile(content: &str) -> Result<Sequence, IngestError> {
    let mut terms: Vec<Rat> = Vec::new();
    let mut next_index: Option<i64> = None;
    for (lineno, raw) in content.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return fail(format!("malformed line {lineno}: expected 'index value'"));
        };
        let idx: i64 = match idx.parse() {
            Ok(i) => i,
            Err(_) => return fail(format!("malformed line {lineno}: bad index '{idx}'")),
        };
        match next_index {
            None => next_index = Some(idx + 1),
            Some(expected) => {
                if idx != expected {
                    return fail(format!("non-contiguous index at line {lineno}"));
                }
                next_index = Some(idx + 1);
            }
        }
        terms.push(parse_rat(val).map_err(|e| IngestError {
            msg: format!("line {lineno}: {e}"),
        })?);
    }
    if terms.is_empty() {
        return fail("empty input");
    }
    Ok(Sequence::new(terms).expect("nonempty"))
}

pub fn read_bfile(path: &Path) -> Result<Sequence, IngestError> {
    let content = std::fs::read_to_string(path).map_err(|e| IngestError {
        msg: format!("cannot read '{}': {e}", path.display()),
    })?;
    parse_bfile(&content)
}
