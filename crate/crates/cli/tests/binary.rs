//! End-to-end tests of the `drg` executable: exit codes, output formats
//! and the JSON round trip.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use drg_cli::catalog_io::CatalogResult;
use drg_cli::report::AnalysisReport;

fn drg(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_drg"));
    cmd.args(args)
        .env_remove("DRG_MAX_VERTICES")
        .envs(env.iter().copied());
    let mut child = cmd
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(code(&drg(&["analyze", "10,5,4,2;1,2,2,10"], "", &[])), 0);
    assert_eq!(
        code(&drg(
            &["analyze", "{3,2,1;1,2,3}", "--expect-q", "1"],
            "",
            &[]
        )),
        0
    );
    assert_eq!(
        code(&drg(
            &["analyze", "3,2,1;1,2,3", "--expect-q", "2"],
            "",
            &[]
        )),
        1
    );
    // a_1 < 0 violates an array invariant: infeasible, not unreadable.
    assert_eq!(code(&drg(&["analyze", "3,3;1,1"], "", &[])), 1);
    assert_eq!(code(&drg(&["analyze", "3,2;1"], "", &[])), 2);
    assert_eq!(code(&drg(&["analyze", "three;1"], "", &[])), 2);
}

#[test]
fn json_round_trip_is_byte_identical() {
    for array in [
        "4,3,2,1;1,2,3,4",
        "2,1,1,1;1,1,1,2",
        "3,2;1,2",
        "9,8,7,6;1,2,3,4",
    ] {
        let out = drg(&["--format", "json", "analyze", array], "", &[]);
        let text = stdout(&out);
        let report: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(report.to_json() + "\n", text, "{array}");
    }
}

#[test]
fn exact_values_carry_polynomial_interval_and_decimal() {
    let out = drg(&["--format", "json", "family", "selfdual", "3"], "", &[]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let theta1 = &v["spectrum"][1]["value"];
    assert_eq!(theta1["minimal_polynomial"].as_array().unwrap().len(), 3);
    assert_eq!(theta1["interval"].as_array().unwrap().len(), 2);
    assert!(theta1["decimal"]
        .as_str()
        .unwrap()
        .starts_with("11.485281374"));
}

#[test]
fn build_graph_honours_vertex_cap() {
    assert_eq!(code(&drg(&["build-graph", "hypercube", "4"], "", &[])), 0);
    assert_eq!(
        code(&drg(
            &["build-graph", "hypercube", "4"],
            "",
            &[("DRG_MAX_VERTICES", "15")]
        )),
        1
    );
    assert_eq!(
        code(&drg(
            &["build-graph", "hypercube", "4"],
            "",
            &[("DRG_MAX_VERTICES", "many")]
        )),
        2
    );
    let out = drg(&["--format", "json", "build-graph", "cycle", "7"], "", &[]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["array"], "2,1,1;1,1,1");
}

#[test]
fn catalog_preserves_input_order_and_reports_mismatches() {
    let input = concat!(
        "{\"name\":\"Petersen\",\"array\":\"3,2;1,1\",\"expect\":{\"q_structures\":2}}\n",
        "\n",
        "{\"name\":\"cube\",\"array\":\"3,2,1;1,2,3\",\"expect\":{\"bipartite\":true,\"tight\":false}}\n",
        "{\"name\":\"K_3,3\",\"array\":\"3,2;1,3\"}\n",
    );
    let out = drg(&["--format", "json", "catalog", "-"], input, &[]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let names: Vec<String> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str::<CatalogResult>(l).unwrap().name)
        .collect();
    assert_eq!(names, ["Petersen", "cube", "K_3,3"]);

    let wrong = "{\"name\":\"cube\",\"array\":\"3,2,1;1,2,3\",\"expect\":{\"q_structures\":5}}\n";
    assert_eq!(code(&drg(&["catalog"], wrong, &[])), 1);
    assert_eq!(code(&drg(&["catalog"], "{\"name\":1}\n", &[])), 2);
    assert_eq!(
        code(&drg(
            &["catalog"],
            "{\"name\":\"x\",\"array\":\"1;\"}\n",
            &[]
        )),
        2
    );
}

#[test]
fn builtin_catalog_dump_feeds_back_in() {
    let dump = drg(&["catalog", "--dump-builtin"], "", &[]);
    assert_eq!(code(&dump), 0);
    assert!(stdout(&dump).lines().count() >= 20);
    let small: String = stdout(&dump)
        .lines()
        .take(5)
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(code(&drg(&["catalog"], &small, &[])), 0);
}

#[test]
fn verify_suites_exit_codes() {
    assert_eq!(code(&drg(&["verify", "selfdual", "--mu", "2"], "", &[])), 0);
    assert_eq!(
        code(&drg(&["verify", "oracle", "--max-d", "3"], "", &[])),
        0
    );
    assert_eq!(
        code(&drg(&["verify", "ngon", "--n", "4,5,6,7"], "", &[])),
        0
    );
    assert_eq!(code(&drg(&["verify", "nonsense"], "", &[])), 2);
}
