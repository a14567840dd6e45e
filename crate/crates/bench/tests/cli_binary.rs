mod common;

use std::process::Command;

use common::{write, TRIANGLE_GSET};

fn bench() -> Command {
    Command::new(env!("CARGO_BIN_EXE_amfd-bench"))
}

#[test]
fn writes_csv_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "triangle.txt", TRIANGLE_GSET);
    let out = bench()
        .args(["--problem", "mcp", "--solver", "amfd", "--steps", "60", "--replicas", "4", "--bks", "-2"])
        .arg("--instance")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("instance,solver,n_step"));
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn config_file_with_flag_override_and_sweep() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "triangle.txt", TRIANGLE_GSET);
    let cfg = write(
        dir.path(),
        "run.cfg",
        "problem = mcp\ninstance = triangle.txt\nreplicas = 2\nsteps = 5\nformat = csv\nout = out.json\n",
    );
    let status = bench().arg("--config").arg(&cfg).args(["--steps", "5,50", "--format", "json"]).status().unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(dir.path().join("out.json")).unwrap();
    let rs = amfd_bench::read_json(&text).unwrap();
    assert_eq!(rs.iter().map(|r| r.n_step).collect::<Vec<_>>(), vec![5, 50]);
}

#[test]
fn failures_exit_nonzero_with_message() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "triangle.txt", TRIANGLE_GSET);
    let out = bench()
        .args(["--problem", "mcp", "--solver", "nmfa", "--zeta", "1"])
        .arg("--instance")
        .arg(&path)
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("zeta does not apply"));

    let out = bench().args(["--problem", "mcp", "--instance"]).arg(dir.path().join("none")).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}
