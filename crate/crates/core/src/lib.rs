//! Annealed mean field descent and mean-field annealing for QUBO models,
//! with formulations of five classic combinatorial problems and readers for
//! their benchmark formats.
//!
//! ```
//! use amfd::problems::{build_mcp, decode_mcp, WeightedGraph};
//! use amfd::solvers::{amfd_solve, linear_schedule, AmfdParams};
//!
//! let g = WeightedGraph::unweighted(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
//! let (model, _) = build_mcp(&g).unwrap();
//! let params = AmfdParams {
//!     eta: 0.1,
//!     zeta: 0.0,
//!     schedule: linear_schedule(0.3, 0.0, 100).unwrap(),
//!     seed: 7,
//!     n_replicas: 8,
//! };
//! let out = amfd_solve(&model, &params).unwrap();
//! assert_eq!(out.best_energy, -2.0);
//! assert_eq!(decode_mcp(&g, &out.best_spins).unwrap().objective, 2.0);
//! ```

pub mod error;
pub mod ingest;
pub mod mf;
pub mod problems;
pub mod qubo;
pub mod solvers;

pub use error::{Error, Result};
pub use qubo::{round_to_binary, MfVector, QuboBuilder, QuboModel, SpinVector};
