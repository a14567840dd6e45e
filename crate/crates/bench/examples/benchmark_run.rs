//! End-to-end harness run: write a coloring instance to disk, run AMFD with
//! its published parameters and print the CSV and JSON reports.

use amfd::problems::ProblemKind;
use amfd_bench::{run_benchmark, write_results, OutputFormat, Settings, SolverKind};

fn myciel5() -> String {
    let mut n = 2;
    let mut edges = vec![(0, 1)];
    for _ in 2..6 {
        let mut next = edges.clone();
        for &(u, v) in &edges {
            next.push((u, n + v));
            next.push((v, n + u));
        }
        next.extend((0..n).map(|u| (n + u, 2 * n)));
        edges = next;
        n = 2 * n + 1;
    }
    let mut s = format!("p edge {n} {}\n", edges.len());
    for (u, v) in edges {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}

fn main() -> amfd_bench::Result<()> {
    let path = std::env::temp_dir().join("myciel5.col");
    std::fs::write(&path, myciel5()).map_err(|e| amfd_bench::BenchError::Io { path: path.clone(), source: e })?;

    let plan = Settings {
        problem: Some(ProblemKind::Gcp),
        instance: Some(path),
        solver: Some(SolverKind::Amfd),
        params: Some("paper:myciel5".into()),
        replicas: Some(128),
        ..Settings::default()
    }
    .resolve()?;
    let record = run_benchmark(&plan.config)?;
    println!("colors {:?}, accuracy {:?}, {:.1} ms", record.best_objective, record.accuracy, record.wall_ms);

    let records = [record];
    write_results(&records, OutputFormat::Csv, std::io::stdout().lock())?;
    let mut json = Vec::new();
    write_results(&records, OutputFormat::Json, &mut json)?;
    println!("{} bytes of JSON, {} replica summaries", json.len(), records[0].replicas.len());
    Ok(())
}
