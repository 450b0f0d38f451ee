//! Text and JSON decoders for command-line and file input.

use crate::branching::Filtration;
use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::multipartition::Multipartition;
use crate::tableau::Tableau;
use crate::Result;

/// Parses `"2,1|1"`, `"(2,1|-)"` or the JSON form `[[2,1],[1]]`.
///
/// Components are separated by `|`; an empty component is written as
/// nothing, `-` or `∅`.
pub fn parse_multipartition(input: &str) -> Result<Multipartition> {
    let shape = parse_shape_unchecked(input)?;
    if shape.size() > MAX_PARSED_SIZE {
        return Err(Error::Parse(format!(
            "shape of size {} exceeds the limit {MAX_PARSED_SIZE}",
            shape.size()
        )));
    }
    Ok(shape)
}

/// Largest total size accepted from text. Everything downstream is at
/// least linear in the size (conjugates, diagrams), so a typo like
/// `999999999` would otherwise try to allocate gigabytes.
pub const MAX_PARSED_SIZE: usize = 1000;

/// Bound on exponents and coefficients of decoded polynomials, so that
/// bar and shifts cannot overflow.
pub const MAX_LAURENT_ENTRY: i64 = i32::MAX as i64;

fn parse_shape_unchecked(input: &str) -> Result<Multipartition> {
    let s = input.trim();
    if s.starts_with('[') {
        return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
    }
    let s = s
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .unwrap_or(s);
    let components = s
        .split('|')
        .map(|comp| {
            let comp = comp.trim();
            if comp.is_empty() || comp == "-" || comp == "∅" {
                return Ok(Vec::new());
            }
            comp.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad part {part:?}: {e}")))
                })
                .collect()
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    Multipartition::new(components)
}

/// Parses a comma-separated multicharge such as `"3,0"`.
pub fn parse_charge(input: &str) -> Result<Vec<i64>> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::EmptyMulticharge);
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad charge entry {x:?}: {e}")))
        })
        .collect()
}

/// Decodes a tableau from nested JSON lists. Only row standardness is
/// enforced.
pub fn parse_tableau_json(input: &str) -> Result<Tableau> {
    serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_filtration_json(input: &str) -> Result<Filtration> {
    serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_laurent_json(input: &str) -> Result<LaurentPoly> {
    let raw: Vec<(i64, i64)> =
        serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    if let Some(&(e, c)) = raw.iter().find(|(e, c)| {
        e.abs_diff(0) > MAX_LAURENT_ENTRY as u64 || c.abs_diff(0) > MAX_LAURENT_ENTRY as u64
    }) {
        return Err(Error::Parse(format!("term ({e}, {c}) out of range")));
    }
    Ok(LaurentPoly::from_terms(raw))
}
