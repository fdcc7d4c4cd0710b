use gridlink::{run, EXIT_FAIL, EXIT_INCOMPLETE, EXIT_OK, EXIT_USAGE};
use std::io::Write;
use std::process::Command;
use tempfile::NamedTempFile;

fn instance(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn gridlink(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_gridlink")).args(args).env_remove("GRIDLINK_JOBS").output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn path_of(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn solve_exit_codes_follow_status() {
    let sat = instance("grid 2 3\npair (1,1) (1,3)\n");
    let (out, code) = gridlink(&["solve", "--file", path_of(&sat)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("status: SAT\n"), "{out}");
    assert!(out.contains("path 1 (1,1) (1,2) (1,3)\n"), "{out}");

    let unsat = instance("grid 2 2\npair (1,1) (2,2)\npair (1,2) (2,1)\n");
    let (out, code) = gridlink(&["solve", "--file", path_of(&unsat)]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.starts_with("status: UNSAT\n"));

    let (out, code) = gridlink(&["solve", "--file", path_of(&unsat), "--node-limit", "1"]);
    assert_eq!(code, EXIT_INCOMPLETE);
    assert!(out.starts_with("status: TIMEOUT\n"));
}

#[test]
fn parse_errors_name_the_line() {
    let bad = instance("grid 3 3\npair (1,1) (9,9)\n");
    let o = run(["gridlink", "solve", "--file", path_of(&bad)]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("line 2"), "{}", o.stderr);
    assert_eq!(run(["gridlink", "frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(["gridlink", "solve"]).code, EXIT_USAGE);
}

#[test]
fn json_report_carries_paths() {
    let f = instance("grid 2 3\npair (1,1) (1,3)\n");
    let o = run(["gridlink", "solve", "--file", path_of(&f), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["status"], "SAT");
    assert_eq!(v["paths"][0].as_array().unwrap().len(), 3);
}

#[test]
fn constructive_method_reports_its_case() {
    let f = instance("grid 6 6\npair (1,1) (6,6)\npair (1,6) (6,1)\npair (3,3) (4,4)\npair (2,5) (5,2)\n");
    let o = run(["gridlink", "solve", "--file", path_of(&f), "--method", "constructive"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.contains("method: constructive\ncase: A1"), "{}", o.stdout);
    assert!(o.stdout.contains("fallback: none"));

    let small = instance("grid 2 3\npair (1,1) (1,3)\n");
    let o = run(["gridlink", "solve", "--file", path_of(&small), "--method", "constructive"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("method: oracle"));
    assert!(o.stderr.contains("using the oracle"));
}

#[test]
fn verify_and_render_a_straight_path() {
    let f = instance("grid 2 3\npair (1,1) (1,3)\npath 1 (1,1) (1,2) (1,3)\n");
    assert_eq!(run(["gridlink", "verify", "--file", path_of(&f)]), gridlink::Outcome {
        stdout: "valid\n".into(),
        stderr: String::new(),
        code: EXIT_OK
    });
    let o = run(["gridlink", "render", "--file", path_of(&f)]);
    assert_eq!(o.stdout, "+1+1+\n| | |\n+-+-+\n");
    let o = run(["gridlink", "render", "--file", path_of(&f), "--format", "svg"]);
    assert!(o.stdout.starts_with("<svg"), "{}", o.stdout);

    let broken = instance("grid 2 3\npair (1,1) (1,3)\npath 1 (1,1) (2,2) (1,3)\n");
    let o = run(["gridlink", "verify", "--file", path_of(&broken)]);
    assert_eq!(o.code, EXIT_FAIL);
    assert!(o.stdout.starts_with("invalid\n"));
    assert_eq!(run(["gridlink", "render", "--file", path_of(&broken)]).code, EXIT_FAIL);

    let bare = instance("grid 2 3\npair (1,1) (1,3)\n");
    assert_eq!(run(["gridlink", "verify", "--file", path_of(&bare)]).code, EXIT_USAGE);
}

#[test]
fn counterexample_is_refuted() {
    let (out, code) = gridlink(&["counterexample", "--t1", "6,1", "--t5", "(6,6)"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("status: UNSAT\n"));
    assert!(out.contains("holds: true\n"));
    assert_eq!(run(["gridlink", "counterexample", "--t1", "1,1", "--t5", "6,6"]).code, EXIT_USAGE);
    assert_eq!(run(["gridlink", "counterexample", "--t1", "x", "--t5", "6,6"]).code, EXIT_USAGE);
}

#[test]
fn pp_decides_small_grids() {
    let o = run(["gridlink", "pp", "--rows", "3", "--cols", "3", "--k", "2"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    assert!(o.stdout.contains("k2.total_pairings: 378\n"));
    let o = run(["gridlink", "pp", "--rows", "3", "--cols", "3", "--k", "3"]);
    assert_eq!(o.code, EXIT_FAIL);
    assert!(o.stdout.contains("witness 1:\n  grid 3 3\n"));
    let o = run(["gridlink", "pp", "--rows", "3", "--cols", "3", "--k", "2", "--mode", "sample", "--samples", "50"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("no counterexample in sample"));
}

#[test]
fn certify_writes_certificates() {
    let out = NamedTempFile::new().unwrap();
    let o = run(["gridlink", "certify", "--claim", "pp22", "--out", path_of(&out)]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(std::fs::read_to_string(out.path()).unwrap(), o.stdout);
    assert!(o.stdout.starts_with("claim: pp22\n"));
    let o = run(["gridlink", "certify", "--claim", "pp22", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(run(["gridlink", "certify", "--claim", "nope"]).code, EXIT_USAGE);
    assert!(run(["gridlink", "certify", "--list"]).stdout.contains("lemma-heavy4"));
}

#[test]
fn lemma_command_reports_violations() {
    assert_eq!(run(["gridlink", "lemma", "--name", "frame"]).code, EXIT_OK);
    let o = run(["gridlink", "lemma", "--name", "12toCa"]);
    assert_eq!(o.code, EXIT_FAIL);
    assert!(o.stdout.contains("violations: 16\n"));
    assert_eq!(run(["gridlink", "lemma", "--name", "nope"]).code, EXIT_USAGE);
}

#[test]
fn jobs_come_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_gridlink"))
        .args(["pp", "--rows", "2", "--cols", "2", "--k", "1"])
        .env("GRIDLINK_JOBS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let bad = Command::new(env!("CARGO_BIN_EXE_gridlink"))
        .args(["pp", "--rows", "2", "--cols", "2", "--k", "1"])
        .env("GRIDLINK_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
