use super::{check_size, parse_f64, parse_usize, DeclaredSize, ParseError, ParseResult, Parsed};
use crate::problems::TspInstance;

/// Reads a TSPLIB file with `EUC_2D` coordinates or an `EXPLICIT` weight
/// matrix into a full distance matrix. `EUC_2D` distances are rounded to the
/// nearest integer.
pub fn parse_tsplib_euc2d(text: &str) -> ParseResult<TspInstance> {
    parse(text).map(Parsed::logged)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WeightFormat {
    FullMatrix,
    UpperRow,
    LowerRow,
    UpperDiagRow,
    LowerDiagRow,
}

impl WeightFormat {
    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "FULL_MATRIX" => WeightFormat::FullMatrix,
            "UPPER_ROW" => WeightFormat::UpperRow,
            "LOWER_ROW" => WeightFormat::LowerRow,
            "UPPER_DIAG_ROW" => WeightFormat::UpperDiagRow,
            "LOWER_DIAG_ROW" => WeightFormat::LowerDiagRow,
            _ => return None,
        })
    }

    fn token_count(self, n: usize) -> Option<usize> {
        match self {
            WeightFormat::FullMatrix => n.checked_mul(n),
            WeightFormat::UpperRow | WeightFormat::LowerRow => n.checked_mul(n.saturating_sub(1)).map(|v| v / 2),
            WeightFormat::UpperDiagRow | WeightFormat::LowerDiagRow => n.checked_mul(n + 1).map(|v| v / 2),
        }
    }

    /// `(i, j)` cells in file order.
    fn cells(self, n: usize) -> Box<dyn Iterator<Item = (usize, usize)>> {
        match self {
            WeightFormat::FullMatrix => Box::new((0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))),
            WeightFormat::UpperRow => Box::new((0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))),
            WeightFormat::LowerRow => Box::new((0..n).flat_map(move |i| (0..i).map(move |j| (i, j)))),
            WeightFormat::UpperDiagRow => Box::new((0..n).flat_map(move |i| (i..n).map(move |j| (i, j)))),
            WeightFormat::LowerDiagRow => Box::new((0..n).flat_map(move |i| (0..=i).map(move |j| (i, j)))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    Coords,
    Weights,
    Skip,
}

struct Open {
    section: Section,
    start: usize,
    needed: usize,
    values: Vec<f64>,
}

const SECTION_KEYS: &[&str] =
    &["NODE_COORD_SECTION", "EDGE_WEIGHT_SECTION", "DISPLAY_DATA_SECTION", "FIXED_EDGES_SECTION"];

fn nint(x: f64) -> f64 {
    (x + 0.5).floor()
}

pub(crate) fn parse(text: &str) -> ParseResult<Parsed<TspInstance>> {
    let mut name = None;
    let mut dimension: Option<usize> = None;
    let mut weight_type: Option<String> = None;
    let mut weight_format: Option<WeightFormat> = None;
    let mut coords: Option<Vec<f64>> = None;
    let mut weights: Option<Vec<f64>> = None;
    let mut open: Option<Open> = None;

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let starts_alpha = line.starts_with(|c: char| c.is_ascii_alphabetic());

        if let Some(o) = open.as_mut() {
            if starts_alpha {
                return Err(ParseError::at(
                    ln,
                    format!("section at line {} ended after {} of {} values", o.start, o.values.len(), o.needed),
                ));
            }
            for tok in line.split_whitespace() {
                if o.values.len() == o.needed {
                    return Err(ParseError::at(ln, "surplus values in section"));
                }
                o.values.push(parse_f64(tok, ln, "number")?);
            }
            if o.values.len() == o.needed {
                let done = open.take().expect("open section");
                match done.section {
                    Section::Coords => coords = Some(done.values),
                    Section::Weights => weights = Some(done.values),
                    Section::Skip => {}
                }
            }
            continue;
        }

        if line == "EOF" {
            break;
        }
        let (key, value) = match line.split_once(':') {
            Some((k, v)) => (k.trim(), v.trim()),
            None => (line, ""),
        };
        if SECTION_KEYS.contains(&key) {
            let n = dimension.ok_or_else(|| ParseError::at(ln, "section before DIMENSION"))?;
            let (section, needed) = match key {
                "NODE_COORD_SECTION" => (Section::Coords, n.checked_mul(3)),
                "DISPLAY_DATA_SECTION" => (Section::Skip, n.checked_mul(3)),
                "EDGE_WEIGHT_SECTION" => {
                    let fmt = weight_format.unwrap_or(WeightFormat::FullMatrix);
                    (Section::Weights, fmt.token_count(n))
                }
                _ => return Err(ParseError::at(ln, format!("unsupported format: {key}"))),
            };
            let needed = needed.ok_or_else(|| ParseError::at(ln, "section size overflows"))?;
            if needed > 0 {
                open = Some(Open { section, start: ln, needed, values: Vec::new() });
            }
            continue;
        }
        match key {
            "NAME" => name = Some(value.to_string()),
            "TYPE" => {
                if !matches!(value, "TSP" | "ATSP") {
                    return Err(ParseError::at(ln, format!("unsupported format: TYPE {value}")));
                }
            }
            "DIMENSION" => dimension = Some(check_size(parse_usize(value, ln, "dimension")?, ln)?),
            "EDGE_WEIGHT_TYPE" => {
                if !matches!(value, "EUC_2D" | "EXPLICIT") {
                    return Err(ParseError::at(ln, format!("unsupported format: EDGE_WEIGHT_TYPE {value}")));
                }
                weight_type = Some(value.to_string());
            }
            "EDGE_WEIGHT_FORMAT" => {
                weight_format =
                    Some(WeightFormat::from_name(value).ok_or_else(|| {
                        ParseError::at(ln, format!("unsupported format: EDGE_WEIGHT_FORMAT {value}"))
                    })?);
            }
            "COMMENT" | "DISPLAY_DATA_TYPE" | "NODE_COORD_TYPE" | "CAPACITY" => {}
            _ => return Err(ParseError::at(ln, format!("unknown keyword {key:?}"))),
        }
    }

    if let Some(o) = open {
        return Err(ParseError::at(o.start, format!("section ended after {} of {} values", o.values.len(), o.needed)));
    }
    let n = dimension.ok_or_else(|| ParseError::global("missing DIMENSION"))?;
    let mut warnings = Vec::new();
    let mut d = vec![0.0; n * n];
    match weight_type.as_deref() {
        Some("EUC_2D") => {
            let c = coords.ok_or_else(|| ParseError::global("missing NODE_COORD_SECTION"))?;
            for (k, node) in c.chunks_exact(3).enumerate() {
                if node[0] != (k + 1) as f64 {
                    warnings.push(format!("node {} listed as {}", k + 1, node[0]));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let (dx, dy) = (c[3 * i + 1] - c[3 * j + 1], c[3 * i + 2] - c[3 * j + 2]);
                        d[i * n + j] = nint(dx.hypot(dy));
                    }
                }
            }
        }
        Some(_) => {
            let w = weights.ok_or_else(|| ParseError::global("missing EDGE_WEIGHT_SECTION"))?;
            let fmt = weight_format.unwrap_or(WeightFormat::FullMatrix);
            let mut diag = 0usize;
            for ((i, j), v) in fmt.cells(n).zip(w) {
                if i == j {
                    if v != 0.0 {
                        diag += 1;
                    }
                    continue;
                }
                d[i * n + j] = v;
                if fmt != WeightFormat::FullMatrix {
                    d[j * n + i] = v;
                }
            }
            if diag > 0 {
                warnings.push(format!("zeroed {diag} nonzero self-distances"));
            }
        }
        None => return Err(ParseError::global("missing EDGE_WEIGHT_TYPE")),
    }
    let inst = TspInstance::from_flat(n, d).map_err(|e| ParseError::global(e.to_string()))?;
    Ok(Parsed { value: inst, declared: DeclaredSize { n, m: None }, name, warnings })
}
