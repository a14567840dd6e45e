#![allow(dead_code)]

use std::path::{Path, PathBuf};

use amfd::problems::ProblemKind;
use amfd_bench::{RunConfig, SolverKind};

pub const TRIANGLE_GSET: &str = "3 3\n1 2 1\n2 3 1\n1 3 1\n";

/// Edges of the Mycielski graph M_k: M_2 = K_2, then each step adds a
/// shadow of every vertex and a hub joined to all shadows.
pub fn mycielski(k: usize) -> (usize, Vec<(usize, usize)>) {
    let mut n = 2;
    let mut edges = vec![(0, 1)];
    for _ in 2..k {
        let mut next = edges.clone();
        for &(u, v) in &edges {
            next.push((u, n + v));
            next.push((v, n + u));
        }
        for u in 0..n {
            next.push((n + u, 2 * n));
        }
        edges = next;
        n = 2 * n + 1;
    }
    (n, edges)
}

pub fn dimacs_text(n: usize, edges: &[(usize, usize)]) -> String {
    let mut s = format!("p edge {n} {}\n", edges.len());
    for (u, v) in edges {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}

pub fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

pub fn config(problem: ProblemKind, path: &Path, solver: SolverKind) -> RunConfig {
    RunConfig::new(problem, path, solver).unwrap()
}
