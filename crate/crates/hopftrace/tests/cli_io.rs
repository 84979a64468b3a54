//! CLI contract tests: exit codes, file round-trips, witnesses on failure,
//! and batch manifests.

use std::path::{Path, PathBuf};

use clap::Parser;

use hopftrace::cli::{run, Cli};
use hopftrace::report::Status;

fn run_args(args: &[&str]) -> hopftrace::report::Report {
    let mut full = vec!["hopftrace"];
    full.extend_from_slice(args);
    let cli = Cli::parse_from(full);
    run(&cli)
}

fn tmp_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopftrace-test-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn check_passes_on_hexagon_with_field() {
    let dir = tmp_dir("check-pass");
    let out = dir.to_str().unwrap();
    let built = run_args(&["--output-dir", out, "build", "zp-circle", "3", "2"]);
    assert_eq!(built.exit_code, 0, "{}", built.to_json());

    let complex = dir.join("zp_circle_3_2.complex.json");
    let dvf = dir.join("zp_circle_3_2.dvf.json");
    let report = run_args(&[
        "check",
        complex.to_str().unwrap(),
        "--dvf",
        dvf.to_str().unwrap(),
    ]);
    assert_eq!(report.status, Status::Pass);
    assert_eq!(report.exit_code, 0);
    assert_eq!(report.result["critical_counts"], serde_json::json!([1, 1]));
}

#[test]
fn check_fails_with_closed_trajectory_witness() {
    let dir = tmp_dir("check-fail");
    let complex = dir.join("triangle.json");
    write(&complex, r#"{"maximal_simplices": [[0,1],[1,2],[0,2]]}"#);
    let dvf = dir.join("cyclic.json");
    write(&dvf, r#"{"pairs": [[[0],[0,1]],[[1],[1,2]],[[2],[0,2]]]}"#);
    let report = run_args(&[
        "check",
        complex.to_str().unwrap(),
        "--dvf",
        dvf.to_str().unwrap(),
    ]);
    assert_eq!(report.status, Status::Fail);
    assert_eq!(report.exit_code, 1);
    let witness = report.result["closed_trajectory"].as_array().unwrap();
    assert_eq!(
        witness.len(),
        7,
        "alternating closed trajectory through C_3"
    );
}

#[test]
fn malformed_json_is_a_parse_error() {
    let dir = tmp_dir("parse-error");
    let bad = dir.join("bad.json");
    write(&bad, "{\"maximal_simplices\": [[0,1]");
    let report = run_args(&["check", bad.to_str().unwrap()]);
    assert_eq!(report.status, Status::Error);
    assert_eq!(report.exit_code, 2);
    let msg = report.result["error"].as_str().unwrap();
    assert!(msg.contains("line") && msg.contains("column"), "{msg}");
}

#[test]
fn hopf_command_on_identity_and_rotation() {
    let dir = tmp_dir("hopf");
    let out = dir.to_str().unwrap();
    run_args(&["--output-dir", out, "build", "zp-circle", "3", "2"]);
    let complex = dir.join("zp_circle_3_2.complex.json");
    let dvf = dir.join("zp_circle_3_2.dvf.json");

    let report = run_args(&[
        "hopf",
        complex.to_str().unwrap(),
        dvf.to_str().unwrap(),
        "--map",
        "identity",
    ]);
    assert_eq!(report.exit_code, 0);
    assert_eq!(report.result["lhs"], 0);
    assert_eq!(report.result["rhs"], 0);

    let rotation = dir.join("rotation.json");
    write(
        &rotation,
        r#"{"vertex_map": {"0": 1, "1": 2, "2": 3, "3": 4, "4": 5, "5": 0}}"#,
    );
    let report = run_args(&[
        "hopf",
        complex.to_str().unwrap(),
        dvf.to_str().unwrap(),
        "--map",
        rotation.to_str().unwrap(),
    ]);
    assert_eq!(report.exit_code, 0, "{}", report.to_json());
    assert_eq!(report.result["equal"], true);
}

#[test]
fn degree_command_identity_k0() {
    let dir = tmp_dir("degree");
    let out = dir.to_str().unwrap();
    run_args(&["--output-dir", out, "build", "zp-circle", "3", "2"]);
    let complex = dir.join("zp_circle_3_2.complex.json");
    let action = dir.join("zp_circle_3_2.action.json");
    let id_map = dir.join("identity.json");
    write(
        &id_map,
        r#"{"vertex_map": {"0": 0, "1": 1, "2": 2, "3": 3, "4": 4, "5": 5}}"#,
    );
    let report = run_args(&[
        "degree",
        "--map",
        id_map.to_str().unwrap(),
        "--target",
        complex.to_str().unwrap(),
        "--target-action",
        action.to_str().unwrap(),
    ]);
    assert_eq!(report.exit_code, 0, "{}", report.to_json());
    assert_eq!(report.result["degree"], 1);
    assert_eq!(report.result["oracle_degree"], 1);
    assert_eq!(report.result["residue"], 1);
    assert_eq!(report.result["pass"], true);
}

#[test]
fn build_octahedron_by_joins() {
    let dir = tmp_dir("join");
    let out = dir.to_str().unwrap();
    let s0 = dir.join("s0.json");
    write(&s0, r#"{"maximal_simplices": [[0],[1]]}"#);
    let report = run_args(&[
        "--output-dir",
        out,
        "build",
        "join",
        s0.to_str().unwrap(),
        s0.to_str().unwrap(),
    ]);
    assert_eq!(report.exit_code, 0, "{}", report.to_json());
    assert_eq!(report.result["simplex_counts"], serde_json::json!([4, 4]));

    let square = dir.join("join.complex.json");
    let square_dvf = dir.join("join.dvf.json");
    let sub = dir.join("oct");
    let report = run_args(&[
        "--output-dir",
        sub.to_str().unwrap(),
        "build",
        "join",
        square.to_str().unwrap(),
        s0.to_str().unwrap(),
        "--dvf-left",
        square_dvf.to_str().unwrap(),
    ]);
    assert_eq!(report.exit_code, 0, "{}", report.to_json());
    assert_eq!(
        report.result["simplex_counts"],
        serde_json::json!([6, 12, 8])
    );
    assert_eq!(report.result["witness"]["dimension"], 2);
}

#[test]
fn build_bd_transfers_witness() {
    let dir = tmp_dir("bd");
    let out = dir.to_str().unwrap();
    run_args(&["--output-dir", out, "build", "zp-circle", "3", "2"]);
    let complex = dir.join("zp_circle_3_2.complex.json");
    let dvf = dir.join("zp_circle_3_2.dvf.json");
    let report = run_args(&[
        "--output-dir",
        out,
        "build",
        "bd",
        complex.to_str().unwrap(),
        "--dvf",
        dvf.to_str().unwrap(),
    ]);
    assert_eq!(report.exit_code, 0, "{}", report.to_json());
    assert_eq!(report.result["simplex_counts"], serde_json::json!([12, 12]));

    // the emitted pair re-checks as a sphere witness
    let report = run_args(&[
        "check",
        dir.join("bd.complex.json").to_str().unwrap(),
        "--dvf",
        dir.join("bd.dvf.json").to_str().unwrap(),
    ]);
    assert_eq!(report.exit_code, 0);
    assert_eq!(report.result["critical_counts"], serde_json::json!([1, 1]));
}

#[test]
fn emitted_files_round_trip_byte_identically() {
    let dir = tmp_dir("roundtrip");
    let out = dir.to_str().unwrap();
    run_args(&["--output-dir", out, "build", "skeleton", "3", "2"]);
    for name in ["skeleton_3_2.complex.json", "skeleton_3_2.dvf.json"] {
        let path = dir.join(name);
        let original = std::fs::read_to_string(&path).unwrap();
        if name.ends_with(".complex.json") {
            let parsed: hopftrace::io::ComplexFile = serde_json::from_str(&original).unwrap();
            let k = parsed.into_complex().unwrap();
            let again =
                hopftrace::io::to_canonical_json(&hopftrace::io::ComplexFile::from_complex(&k))
                    .unwrap();
            assert_eq!(original, again, "{name}");
        } else {
            let parsed: hopftrace::io::DvfFile = serde_json::from_str(&original).unwrap();
            let again = hopftrace::io::to_canonical_json(&parsed).unwrap();
            assert_eq!(original, again, "{name}");
        }
    }
}

#[test]
fn batch_manifest_runs_jobs_in_order() {
    let dir = tmp_dir("batch");
    let out = dir.to_str().unwrap();
    run_args(&["--output-dir", out, "build", "zp-circle", "3", "2"]);
    let manifest = dir.join("jobs.json");
    write(
        &manifest,
        r#"{
  "jobs": [
    {"cmd": "check", "complex": "zp_circle_3_2.complex.json", "dvf": "zp_circle_3_2.dvf.json"},
    {"cmd": "hopf", "complex": "zp_circle_3_2.complex.json", "dvf": "zp_circle_3_2.dvf.json"},
    {"cmd": "hopf-random", "trials": 25}
  ]
}"#,
    );
    let report = run_args(&["--seed", "42", "batch", manifest.to_str().unwrap()]);
    assert_eq!(report.exit_code, 0, "{}", report.to_json());
    let jobs = report.result["jobs"].as_array().unwrap();
    assert_eq!(jobs.len(), 3);
    assert_eq!(jobs[0]["command"], "check");
    assert_eq!(jobs[1]["command"], "hopf");
    assert_eq!(jobs[2]["command"], "hopf-random");
    assert_eq!(jobs[2]["result"]["trials"], 25);
    assert_eq!(jobs[2]["result"]["seed"], 42);
}

#[test]
fn batch_exit_code_is_worst_job() {
    let dir = tmp_dir("batch-fail");
    let complex = dir.join("triangle.json");
    write(&complex, r#"{"maximal_simplices": [[0,1],[1,2],[0,2]]}"#);
    let dvf = dir.join("cyclic.json");
    write(&dvf, r#"{"pairs": [[[0],[0,1]],[[1],[1,2]],[[2],[0,2]]]}"#);
    let manifest = dir.join("jobs.json");
    write(
        &manifest,
        r#"{"jobs": [
          {"cmd": "check", "complex": "triangle.json"},
          {"cmd": "check", "complex": "triangle.json", "dvf": "cyclic.json"}
        ]}"#,
    );
    let report = run_args(&["batch", manifest.to_str().unwrap()]);
    assert_eq!(report.exit_code, 1);
    assert_eq!(report.status, Status::Fail);
}

#[test]
fn integrity_errors_exit_three() {
    // a dvf whose critical census is wrong for a sphere witness: the bd
    // builder requires a witness, so feed it a non-witness field
    let dir = tmp_dir("integrity");
    let complex = dir.join("hexagon.json");
    write(
        &complex,
        r#"{"maximal_simplices": [[0,1],[1,2],[2,3],[3,4],[4,5],[0,5]]}"#,
    );
    let dvf = dir.join("partial.json");
    write(&dvf, r#"{"pairs": [[[1],[0,1]]]}"#);
    let report = run_args(&[
        "--output-dir",
        dir.to_str().unwrap(),
        "build",
        "bd",
        complex.to_str().unwrap(),
        "--dvf",
        dvf.to_str().unwrap(),
    ]);
    // too many critical cells: a domain error (exit 2), named clearly
    assert_eq!(report.exit_code, 2, "{}", report.to_json());
    assert!(report.result["error"]
        .as_str()
        .unwrap()
        .contains("critical"));
}
