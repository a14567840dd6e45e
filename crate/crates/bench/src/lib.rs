//! Benchmark harness around the `amfd` solvers: reads a standard instance,
//! builds its QUBO, runs a solver over replicas and reports solution quality
//! against best known solutions as CSV or JSON.
//!
//! ```no_run
//! use amfd::problems::ProblemKind;
//! use amfd_bench::{run_benchmark, RunConfig, SolverKind};
//!
//! let config = RunConfig::new(ProblemKind::Mcp, "data/G1", SolverKind::Amfd).unwrap();
//! let record = run_benchmark(&config).unwrap();
//! println!("{:?} {:?}", record.best_objective, record.accuracy);
//! ```

pub mod cli;
pub mod config;
pub mod error;
pub mod presets;
pub mod report;
pub mod run;

pub use cli::Cli;
pub use config::{Plan, RunConfig, Settings, SolverKind, SolverSpec, StepSpec};
pub use error::{BenchError, Result};
pub use report::{emit_results, read_json, write_results, OutputFormat, ReplicaSummary, RunRecord};
pub use run::{execute, run_benchmark, sweep_nstep, Prepared};
