//! Annealing solvers over [`QuboModel`](crate::QuboModel)s.

mod amfd;
mod mfa;
mod replicas;
mod schedule;

pub use amfd::{amfd_init, amfd_solve, amfd_solve_with, amfd_step, Amfd, AmfdParams};
pub use mfa::{
    mfa_solve, mfa_solve_with, pmfa_solve, pmfa_solve_with, pmfa_step, MfaParams, ParallelMfa, SerialMfa,
    SerialMfaParams,
};
pub use replicas::{
    replica_seed, run_replicas, Annealer, ReplicaOutcome, RunOptions, SolveResult, Tracer, TrajectoryPoint,
};
pub use schedule::{linear_schedule, Schedule, StepPreset};
