use std::collections::HashSet;

use super::{check_size, parse_usize, vertex, DeclaredSize, ParseError, ParseResult, Parsed};
use crate::problems::WeightedGraph;

/// Complementing squares the edge count, so it is capped separately.
const MAX_COMPLEMENT_VERTICES: usize = 20_000;

/// Reads a DIMACS clique file; with `complement` the result is the
/// complement graph, the input for independent set.
pub fn parse_dimacs_clique(text: &str, complement: bool) -> ParseResult<WeightedGraph> {
    parse_clique(text, complement).map(Parsed::logged)
}

/// Reads a DIMACS coloring file. Repeated edges are merged with a warning.
pub fn parse_dimacs_col(text: &str) -> ParseResult<WeightedGraph> {
    parse_col(text).map(Parsed::logged)
}

pub(crate) fn parse_clique(text: &str, complement: bool) -> ParseResult<Parsed<WeightedGraph>> {
    let mut p = parse_edges(text)?;
    if complement {
        let n = p.value.n_vertex();
        if n > MAX_COMPLEMENT_VERTICES {
            return Err(ParseError::global(format!(
                "{n} vertices is too many to complement (limit {MAX_COMPLEMENT_VERTICES})"
            )));
        }
        p.value = p.value.complement();
    }
    Ok(p)
}

pub(crate) fn parse_col(text: &str) -> ParseResult<Parsed<WeightedGraph>> {
    parse_edges(text)
}

/// Shared `c` / `p edge n m` / `e i j` grammar. The declared count is
/// matched against edge lines as written, before merging repeats.
fn parse_edges(text: &str) -> ParseResult<Parsed<WeightedGraph>> {
    let mut header: Option<(usize, usize)> = None;
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let mut lines_read = 0usize;
    let mut duplicates = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.trim();
        let mut toks = line.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        let rest: Vec<&str> = toks.collect();
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(ParseError::at(ln, "second problem line"));
                }
                if rest.len() != 3 || !matches!(rest[0], "edge" | "col") {
                    return Err(ParseError::at(ln, "problem line must be `p edge n m`"));
                }
                let n = check_size(parse_usize(rest[1], ln, "vertex count")?, ln)?;
                let m = parse_usize(rest[2], ln, "edge count")?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| ParseError::at(ln, "edge before problem line"))?;
                if rest.len() != 2 {
                    return Err(ParseError::at(ln, "edge line must be `e i j`"));
                }
                let a = vertex(rest[0], n, ln)?;
                let b = vertex(rest[1], n, ln)?;
                if a == b {
                    return Err(ParseError::at(ln, format!("self-loop on vertex {}", a + 1)));
                }
                lines_read += 1;
                if seen.insert((a.min(b), a.max(b))) {
                    edges.push((a, b));
                } else {
                    duplicates += 1;
                }
            }
            _ => return Err(ParseError::at(ln, format!("unexpected line tag {tag:?}"))),
        }
    }

    let (n, m) = header.ok_or_else(|| ParseError::global("missing problem line"))?;
    if lines_read != m {
        return Err(ParseError::global(format!("declared {m} edges, found {lines_read}")));
    }
    let mut warnings = Vec::new();
    if duplicates > 0 {
        warnings.push(format!("merged {duplicates} repeated edges"));
    }
    let g = WeightedGraph::unweighted(n, edges).map_err(|e| ParseError::global(e.to_string()))?;
    Ok(Parsed { value: g, declared: DeclaredSize { n, m: Some(m) }, name: None, warnings })
}
