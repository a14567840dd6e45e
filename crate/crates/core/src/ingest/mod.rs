//! Readers for the public benchmark formats: Gset edge lists, DIMACS
//! `p edge` graphs, TSPLIB and QAPLIB.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::problems::{ProblemKind, QapInstance, TspInstance, WeightedGraph};

mod dimacs;
mod gset;
mod qaplib;
mod tsplib;

pub use dimacs::{parse_dimacs_clique, parse_dimacs_col};
pub use gset::parse_gset;
pub use qaplib::parse_qaplib;
pub use tsplib::parse_tsplib_euc2d;

/// Largest vertex or city count any reader accepts.
pub const MAX_DECLARED_SIZE: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line, when the problem is tied to one.
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(line: usize, message: impl Into<String>) -> Self {
        Self { line: Some(line), message: message.into() }
    }

    pub(crate) fn global(message: impl Into<String>) -> Self {
        Self { line: None, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "parse error at line {l}: {}", self.message),
            None => write!(f, "parse error: {}", self.message),
        }
    }
}

impl std::error::Error for ParseError {}

pub type ParseResult<T> = Result<T, ParseError>;

/// Value plus non-fatal findings.
pub(crate) struct Parsed<T> {
    pub value: T,
    pub declared: DeclaredSize,
    pub name: Option<String>,
    pub warnings: Vec<String>,
}

impl<T> Parsed<T> {
    pub(crate) fn logged(self) -> T {
        for w in &self.warnings {
            log::warn!("{w}");
        }
        self.value
    }
}

/// Header sizes as written in the file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeclaredSize {
    /// Vertices, cities or facilities.
    pub n: usize,
    /// Edge lines, for graph formats.
    pub m: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum InstanceData {
    Graph(WeightedGraph),
    Tsp(TspInstance),
    Qap(QapInstance),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParsedInstance {
    pub name: Option<String>,
    pub declared: DeclaredSize,
    pub warnings: Vec<String>,
    pub data: InstanceData,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InstanceFormat {
    Gset,
    DimacsClique { complement: bool },
    DimacsCol,
    Tsplib,
    Qaplib,
}

impl InstanceFormat {
    /// Format of the standard instances for each problem. Independent-set
    /// instances are clique files read through their complement.
    pub fn for_problem(kind: ProblemKind) -> Self {
        match kind {
            ProblemKind::Mcp => InstanceFormat::Gset,
            ProblemKind::Misp => InstanceFormat::DimacsClique { complement: true },
            ProblemKind::Tsp => InstanceFormat::Tsplib,
            ProblemKind::Qap => InstanceFormat::Qaplib,
            ProblemKind::Gcp => InstanceFormat::DimacsCol,
        }
    }
}

impl FromStr for InstanceFormat {
    type Err = ParseError;
    fn from_str(s: &str) -> ParseResult<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gset" => Ok(InstanceFormat::Gset),
            "clique" | "dimacs-clique" => Ok(InstanceFormat::DimacsClique { complement: false }),
            "clique-complement" => Ok(InstanceFormat::DimacsClique { complement: true }),
            "col" | "dimacs-col" => Ok(InstanceFormat::DimacsCol),
            "tsplib" => Ok(InstanceFormat::Tsplib),
            "qaplib" => Ok(InstanceFormat::Qaplib),
            _ => Err(ParseError::global(format!("unknown instance format {s:?}"))),
        }
    }
}

/// Parses `text` and keeps warnings and header sizes alongside the instance.
pub fn parse_instance(format: InstanceFormat, text: &str) -> ParseResult<ParsedInstance> {
    fn wrap<T>(p: Parsed<T>, f: impl FnOnce(T) -> InstanceData) -> ParsedInstance {
        ParsedInstance { name: p.name, declared: p.declared, warnings: p.warnings, data: f(p.value) }
    }
    Ok(match format {
        InstanceFormat::Gset => wrap(gset::parse(text)?, InstanceData::Graph),
        InstanceFormat::DimacsClique { complement } => {
            wrap(dimacs::parse_clique(text, complement)?, InstanceData::Graph)
        }
        InstanceFormat::DimacsCol => wrap(dimacs::parse_col(text)?, InstanceData::Graph),
        InstanceFormat::Tsplib => wrap(tsplib::parse(text)?, InstanceData::Tsp),
        InstanceFormat::Qaplib => wrap(qaplib::parse(text)?, InstanceData::Qap),
    })
}

pub(crate) fn parse_usize(tok: &str, line: usize, what: &str) -> ParseResult<usize> {
    tok.parse().map_err(|_| ParseError::at(line, format!("expected {what}, found {tok:?}")))
}

pub(crate) fn parse_f64(tok: &str, line: usize, what: &str) -> ParseResult<f64> {
    match tok.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(ParseError::at(line, format!("expected {what}, found {tok:?}"))),
    }
}

pub(crate) fn check_size(n: usize, line: usize) -> ParseResult<usize> {
    if n > MAX_DECLARED_SIZE {
        return Err(ParseError::at(line, format!("size {n} exceeds limit {MAX_DECLARED_SIZE}")));
    }
    Ok(n)
}

/// 1-based vertex label to 0-based index.
pub(crate) fn vertex(tok: &str, n: usize, line: usize) -> ParseResult<usize> {
    let v = parse_usize(tok, line, "vertex label")?;
    if v == 0 || v > n {
        return Err(ParseError::at(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}
