//! Signed edge-list files and Petersen sign masks.
//!
//! An edge-list file starts with `n <vertex_count>` and has one edge per
//! line, `u v` or `u v +` for a positive edge and `u v -` for a negative
//! one, with 0-based vertex ids. Blank lines and `#` comments are skipped.

use std::collections::HashSet;
use std::path::Path;
use std::sync::Arc;

use sigpet::{Graph, SignedGraph};

use crate::error::{CensusError, Result};

fn parse_error(line: usize, message: impl Into<String>) -> CensusError {
    CensusError::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_signed_graph(text: &str) -> Result<SignedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `n <vertex_count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| parse_error(header_line, format!("bad vertex count {count:?}")))?,
        _ => return Err(parse_error(header_line, "expected `n <vertex_count>`")),
    };
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let mut negative = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let (u, v, sign) = match fields.as_slice() {
            [u, v] => (*u, *v, "+"),
            [u, v, s] => (*u, *v, *s),
            _ => return Err(parse_error(line, format!("expected `u v [+|-]`, found {text:?}"))),
        };
        let vertex = |s: &str| -> Result<usize> {
            let x = s
                .parse::<usize>()
                .map_err(|_| parse_error(line, format!("bad vertex {s:?}")))?;
            if x >= n {
                return Err(parse_error(line, format!("vertex {x} out of range for n = {n}")));
            }
            Ok(x)
        };
        let (u, v) = (vertex(u)?, vertex(v)?);
        if u == v {
            return Err(parse_error(line, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_error(line, format!("duplicate edge {u} {v}")));
        }
        let negated = match sign {
            "+" => false,
            "-" => true,
            _ => return Err(parse_error(line, format!("bad sign {sign:?}"))),
        };
        edges.push((u, v));
        if negated {
            negative.push((u, v));
        }
    }
    let graph = Arc::new(Graph::new(n, edges)?);
    let mask = negative
        .iter()
        .map(|&(u, v)| graph.edge_id(u, v).expect("edge was just added"))
        .fold(0u128, |m, e| m | 1 << e);
    Ok(SignedGraph::new(graph, mask)?)
}

pub fn load_signed_graph(path: impl AsRef<Path>) -> Result<SignedGraph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CensusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_signed_graph(&text)
}

/// The edge-list form of `s`, readable by [`parse_signed_graph`].
pub fn to_edge_list(s: &SignedGraph) -> String {
    s.to_string()
}

/// Parse a hex sign mask such as `0x7fff` or `1F`.
pub fn parse_mask_value(text: &str) -> Result<u16> {
    let t = text.trim();
    let digits = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")).unwrap_or(t);
    match u32::from_str_radix(digits, 16) {
        Ok(m) if m < 0x8000 => Ok(m as u16),
        _ => Err(CensusError::Mask(text.into())),
    }
}

/// The Petersen signature with the given hex sign mask.
pub fn parse_mask(text: &str) -> Result<SignedGraph> {
    Ok(SignedGraph::petersen(parse_mask_value(text)?)?)
}
