use super::{check_size, parse_f64, parse_usize, DeclaredSize, ParseError, ParseResult, Parsed};
use crate::problems::QapInstance;

/// Reads a QAPLIB file: `n`, then the flow and distance matrices, row by
/// row, with arbitrary whitespace. Nonzero diagonals are zeroed with a warning.
pub fn parse_qaplib(text: &str) -> ParseResult<QapInstance> {
    parse(text).map(Parsed::logged)
}

pub(crate) fn parse(text: &str) -> ParseResult<Parsed<QapInstance>> {
    let mut toks = text.lines().enumerate().flat_map(|(i, l)| l.split_whitespace().map(move |t| (i + 1, t)));

    let (ln, first) = toks.next().ok_or_else(|| ParseError::global("empty input"))?;
    let n = check_size(parse_usize(first, ln, "problem size")?, ln)?;
    let per = n.checked_mul(n).ok_or_else(|| ParseError::at(ln, "size overflows"))?;

    let mut values = Vec::new();
    for (ln, tok) in toks {
        if values.len() == 2 * per {
            return Err(ParseError::at(ln, format!("surplus token {tok:?} after two {n}x{n} matrices")));
        }
        values.push(parse_f64(tok, ln, "matrix entry")?);
    }
    if values.len() != 2 * per {
        return Err(ParseError::global(format!("expected {} matrix entries, found {}", 2 * per, values.len())));
    }
    let d = values.split_off(per);
    let mut f = values;
    let mut d = d;
    let mut warnings = Vec::new();
    for (name, m) in [("flow", &mut f), ("distance", &mut d)] {
        let mut zeroed = 0;
        for i in 0..n {
            if m[i * n + i] != 0.0 {
                m[i * n + i] = 0.0;
                zeroed += 1;
            }
        }
        if zeroed > 0 {
            warnings.push(format!("zeroed {zeroed} diagonal entries of the {name} matrix"));
        }
    }
    let inst = QapInstance::new(n, f, d).map_err(|e| ParseError::global(e.to_string()))?;
    Ok(Parsed { value: inst, declared: DeclaredSize { n, m: None }, name: None, warnings })
}
