//! Maximum independent set through the QUBO penalty formulation, read from
//! a DIMACS clique file as the complement graph.

use amfd::ingest::parse_dimacs_clique;
use amfd::problems::{build_misp, decode_misp, Witness, DEFAULT_MISP_PENALTY};
use amfd::solvers::{amfd_solve, linear_schedule, AmfdParams};

// Complement of a 5-cycle plus an isolated vertex.
const CLIQUE_FILE: &str = "\
c complement of the test graph
p edge 6 10
e 1 3
e 1 4
e 1 6
e 2 4
e 2 5
e 2 6
e 3 5
e 3 6
e 4 6
e 5 6
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_dimacs_clique(CLIQUE_FILE, true)?;
    println!("{} vertices, {} edges after complementing", g.n_vertex(), g.n_edge());
    let (model, _) = build_misp(&g, DEFAULT_MISP_PENALTY)?;
    let params =
        AmfdParams { eta: 0.05, zeta: 2.0, schedule: linear_schedule(0.5, 0.0, 600)?, seed: 4, n_replicas: 32 };
    let out = amfd_solve(&model, &params)?;
    let d = decode_misp(&g, &out.best_spins)?;
    if let Witness::VertexSet(set) = &d.witness {
        println!("independent: {}, size {}, vertices {set:?}", d.feasible, d.objective);
    }
    Ok(())
}
