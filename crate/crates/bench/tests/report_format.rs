mod common;

use amfd::problems::ProblemKind;
use amfd_bench::{emit_results, read_json, run_benchmark, OutputFormat, RunConfig, RunRecord, SolverKind, StepSpec};
use common::{config, write, TRIANGLE_GSET};

fn records(dir: &tempfile::TempDir) -> Vec<RunRecord> {
    let path = write(dir.path(), "triangle.txt", TRIANGLE_GSET);
    let base =
        RunConfig { n_replicas: 4, steps: StepSpec::Fixed(50), ..config(ProblemKind::Mcp, &path, SolverKind::Amfd) };
    vec![
        run_benchmark(&RunConfig { bks: Some(-2.0), ..base.clone() }).unwrap(),
        run_benchmark(&RunConfig { bks: None, seed: 9, ..base }).unwrap(),
    ]
}

#[test]
fn csv_layout() {
    let dir = tempfile::tempdir().unwrap();
    let rs = records(&dir);
    let out = dir.path().join("r.csv");
    emit_results(&rs[..1], OutputFormat::Csv, &out).unwrap();
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        lines[0],
        "instance,solver,n_step,n_replicas,seed,best_objective,best_energy,mean_energy,feasible_count,accuracy,wall_ms"
    );
    let cells: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(&cells[..5], &["triangle", "amfd", "50", "4", "0"]);
    assert_eq!(cells[5], "-2.0000000000000000e0");
    assert_eq!(cells[9], "1.0000000000000000e0");

    emit_results(&rs[1..], OutputFormat::Csv, &out).unwrap();
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().nth(1).unwrap().split(',').nth(9), Some(""));
}

#[test]
fn csv_accuracy_is_recomputable() {
    let dir = tempfile::tempdir().unwrap();
    let rs = records(&dir);
    let out = dir.path().join("r.csv");
    emit_results(&rs, OutputFormat::Csv, &out).unwrap();
    let mut reader = csv::Reader::from_path(&out).unwrap();
    for (row, rec) in reader.records().zip(&rs) {
        let row = row.unwrap();
        let best: Option<f64> = row[5].parse().ok();
        let acc: Option<f64> = row[9].parse().ok();
        assert_eq!(best, rec.best_objective);
        assert_eq!(acc, rec.recompute_accuracy());
    }
}

#[test]
fn json_round_trips_and_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let rs = records(&dir);
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    emit_results(&rs, OutputFormat::Json, &a).unwrap();
    emit_results(&rs, OutputFormat::Json, &b).unwrap();
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert_eq!(read_json(&text).unwrap(), rs);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v[1]["accuracy"].is_null());
}

#[test]
fn unwritable_path_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let rs = records(&dir);
    assert!(emit_results(&rs, OutputFormat::Csv, &dir.path().join("no/such/dir.csv")).is_err());
}
