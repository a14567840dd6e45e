use std::collections::HashSet;

use super::{check_size, parse_f64, parse_usize, vertex, DeclaredSize, ParseError, ParseResult, Parsed};
use crate::problems::WeightedGraph;

/// Reads a Gset edge list: a `n m` header, then `m` lines `i j w` with
/// 1-based vertices. Self-loops and repeated pairs are rejected.
pub fn parse_gset(text: &str) -> ParseResult<WeightedGraph> {
    parse(text).map(Parsed::logged)
}

pub(crate) fn parse(text: &str) -> ParseResult<Parsed<WeightedGraph>> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());

    let (hl, header) = lines.next().ok_or_else(|| ParseError::global("empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(ParseError::at(hl, "header must be `n m`"));
    }
    let n = check_size(parse_usize(toks[0], hl, "vertex count")?, hl)?;
    let m = parse_usize(toks[1], hl, "edge count")?;

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(ParseError::at(ln, "edge line must be `i j w`"));
        }
        let a = vertex(toks[0], n, ln)?;
        let b = vertex(toks[1], n, ln)?;
        let w = parse_f64(toks[2], ln, "edge weight")?;
        if a == b {
            return Err(ParseError::at(ln, format!("self-loop on vertex {}", a + 1)));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(ParseError::at(ln, format!("duplicate edge {} {}", a + 1, b + 1)));
        }
        if edges.len() == m {
            return Err(ParseError::at(ln, format!("declared {m} edges, found more")));
        }
        edges.push((a, b, w));
    }
    if edges.len() != m {
        return Err(ParseError::global(format!("declared {m} edges, found {}", edges.len())));
    }
    let g = WeightedGraph::new(n, edges).map_err(|e| ParseError::global(e.to_string()))?;
    Ok(Parsed { value: g, declared: DeclaredSize { n, m: Some(m) }, name: None, warnings: vec![] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::Edge;

    #[test]
    fn reads_signed_weights() {
        let g = parse_gset("3 2\n1 2 1\n2 3 -1\n").unwrap();
        assert_eq!(g.n_vertex(), 3);
        assert_eq!(g.edges(), &[Edge { u: 0, v: 1, w: 1.0 }, Edge { u: 1, v: 2, w: -1.0 }]);
    }

    #[test]
    fn count_mismatch() {
        let e = parse_gset("2 1\n1 2 1\n1 2 1\n").unwrap_err();
        assert_eq!(e.line, Some(3));
        let e = parse_gset("3 2\n1 2 1\n2 3 1\n1 3 1\n").unwrap_err();
        assert!(e.message.contains("declared 2"));
        assert!(parse_gset("3 3\n1 2 1\n").is_err());
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(parse_gset("2 1\n1 1 1\n").unwrap_err().line, Some(2));
        assert_eq!(parse_gset("2 1\n1 3 1\n").unwrap_err().line, Some(2));
        assert!(parse_gset("2 1\n1 2\n").is_err());
        assert!(parse_gset("2 1\n1 2 nan\n").is_err());
        assert!(parse_gset("").is_err());
        assert!(parse_gset("2\n").is_err());
    }
}
