//! QUBO formulations of the benchmark problems and decoders back to native
//! solutions.

mod encoding;
mod gcp;
mod graph;
mod mcp;
mod misp;
mod qap;
mod solution;
mod tsp;

pub use encoding::{Encoding, Site};
pub use gcp::{build_gcp, build_gcp_with, decode_gcp, default_color_budget, encode_coloring, GcpPenalties};
pub use graph::{Edge, WeightedGraph};
pub use mcp::{build_mcp, decode_mcp};
pub use misp::{build_misp, decode_misp, DEFAULT_MISP_PENALTY};
pub use qap::{build_qap, build_qap_with_penalty, decode_qap, encode_assignment, QapInstance};
pub use solution::{accuracy, DecodedSolution, ProblemKind, Witness};
pub use tsp::{build_tsp, build_tsp_with_penalty, decode_tsp, encode_tour, TspInstance};
