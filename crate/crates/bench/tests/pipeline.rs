mod common;

use amfd::problems::{ProblemKind, Witness};
use amfd::solvers::StepPreset;
use amfd_bench::{run_benchmark, sweep_nstep, BenchError, RunConfig, SolverKind, SolverSpec, StepSpec};
use common::{config, dimacs_text, mycielski, write, TRIANGLE_GSET};

fn triangle(dir: &tempfile::TempDir) -> RunConfig {
    let path = write(dir.path(), "triangle.txt", TRIANGLE_GSET);
    RunConfig {
        n_replicas: 8,
        bks: Some(-2.0),
        steps: StepSpec::Fixed(100),
        ..config(ProblemKind::Mcp, &path, SolverKind::Amfd)
    }
}

#[test]
fn triangle_cut_reaches_known_optimum() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_benchmark(&triangle(&dir)).unwrap();
    assert_eq!(r.instance, "triangle");
    assert_eq!(r.n_spin, 3);
    assert_eq!(r.best_objective, Some(-2.0));
    assert_eq!(r.best_energy, -2.0);
    assert_eq!(r.accuracy, Some(1.0));
    assert_eq!(r.feasible_count, 8);
    assert_eq!(r.replicas.len(), 8);
    let best = r.best_solution.unwrap();
    assert_eq!(best.objective, 2.0);
    assert!(matches!(best.witness, Witness::Partition(_)));
}

#[test]
fn reruns_are_identical_apart_from_time() {
    let dir = tempfile::tempdir().unwrap();
    let c = RunConfig { n_replicas: 32, ..triangle(&dir) };
    let mut a = run_benchmark(&c).unwrap();
    let mut b = run_benchmark(&c).unwrap();
    a.wall_ms = 0.0;
    b.wall_ms = 0.0;
    assert_eq!(a, b);
    let mut one = run_benchmark(&RunConfig { threads: Some(1), ..c.clone() }).unwrap();
    let mut four = run_benchmark(&RunConfig { threads: Some(4), ..c }).unwrap();
    assert_eq!(one.best_objective, four.best_objective);
    one.wall_ms = 0.0;
    four.wall_ms = 0.0;
    assert_eq!(one.replicas, four.replicas);
}

#[test]
fn every_solver_runs() {
    let dir = tempfile::tempdir().unwrap();
    let base = triangle(&dir);
    for solver in [
        SolverSpec::Amfd { eta: 0.1, zeta: 1.0 },
        SolverSpec::Mfa,
        SolverSpec::Pmfa { alpha: 0.5 },
        SolverSpec::Nmfa { alpha: 0.5, sigma: 0.3 },
    ] {
        let c = RunConfig { solver, t_init: 0.45, t_fin: 0.01, steps: StepSpec::Fixed(300), ..base.clone() };
        let r = run_benchmark(&c).unwrap();
        assert_eq!(r.best_objective, Some(-2.0), "{solver:?}");
        assert_eq!(r.accuracy, r.recompute_accuracy());
    }
}

#[test]
fn sweep_returns_records_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let c = triangle(&dir);
    let rs = sweep_nstep(&c, &[3, 30]).unwrap();
    assert_eq!(rs.iter().map(|r| r.n_step).collect::<Vec<_>>(), vec![3, 30]);
    assert_eq!(rs[1].config.steps, StepSpec::Fixed(30));
    assert_eq!(sweep_nstep(&c, &[7]).unwrap().len(), 1);
    for bad in [&[][..], &[0, 3][..], &[30, 3][..]] {
        assert!(matches!(sweep_nstep(&c, bad), Err(BenchError::Config(_))));
    }
}

#[test]
fn presets_scale_with_qubo_size() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "edge.col", "p edge 2 1\ne 1 2\n");
    let c = RunConfig {
        steps: StepSpec::Preset(StepPreset::Medium),
        n_replicas: 4,
        n_color: Some(2),
        ..config(ProblemKind::Gcp, &path, SolverKind::Amfd)
    };
    let r = run_benchmark(&c).unwrap();
    // Two vertices by two colors plus two usage flags.
    assert_eq!(r.n_spin, 6);
    assert_eq!(r.n_step, 60);
}

#[test]
fn each_problem_runs_from_its_file_format() {
    let dir = tempfile::tempdir().unwrap();
    let tsp = "NAME: sq\nTYPE: TSP\nDIMENSION: 4\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n\
               1 0 0\n2 0 10\n3 10 10\n4 10 0\nEOF\n";
    let qap = "3\n0 1 2\n1 0 3\n2 3 0\n0 5 2\n5 0 1\n2 1 0\n";
    let path_clique = "p edge 3 1\ne 1 3\n";
    let (n, edges) = mycielski(3);
    let cases = [
        (ProblemKind::Tsp, "sq.tsp", tsp.to_string(), Some(40.0)),
        (ProblemKind::Qap, "q3.dat", qap.to_string(), None),
        (ProblemKind::Misp, "path.clq", path_clique.to_string(), Some(-2.0)),
        (ProblemKind::Gcp, "c5.col", dimacs_text(n, &edges), Some(3.0)),
    ];
    for (kind, name, text, expected) in cases {
        let path = write(dir.path(), name, &text);
        let c = RunConfig {
            steps: StepSpec::Preset(StepPreset::Long),
            n_replicas: 32,
            ..config(kind, &path, SolverKind::Amfd)
        };
        let r = run_benchmark(&c).unwrap();
        assert!(r.feasible_count > 0, "{kind}");
        if let Some(e) = expected {
            assert_eq!(r.best_objective, Some(e), "{kind}");
        }
    }
}

#[test]
fn errors_name_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let missing = config(ProblemKind::Mcp, &dir.path().join("nope.txt"), SolverKind::Amfd);
    assert!(matches!(run_benchmark(&missing), Err(BenchError::Io { .. })));
    let bad = write(dir.path(), "bad.txt", "3 1\n1 9 1\n");
    let err = run_benchmark(&config(ProblemKind::Mcp, &bad, SolverKind::Amfd)).unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("bad.txt") && msg.contains("line 2"), "{msg}");
}

#[test]
fn no_bks_means_no_accuracy() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_benchmark(&RunConfig { bks: None, ..triangle(&dir) }).unwrap();
    assert_eq!(r.accuracy, None);
}
