use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str], seed: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_arrangeops"));
    cmd.args(args).env_remove("ARRANGEOPS_SEED");
    if let Some(s) = seed {
        cmd.env("ARRANGEOPS_SEED", s);
    }
    cmd.output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"], None).status.code(), Some(0));
    assert_eq!(run(&["--version"], None).status.code(), Some(0));
    assert_eq!(run(&["compose", "--help"], None).status.code(), Some(0));
}

#[test]
fn usage_errors_are_one_line_and_name_the_flag() {
    let out = run(&["laws", "--sample", "3"], None);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert_eq!(err.trim_end().lines().count(), 1);
    assert!(err.contains("--sample"));
    let out = run(&["project", &fixture("generic4.json"), "--at", "1"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--at"));
}

#[test]
fn seed_comes_from_the_environment() {
    let args = ["yb-check", "--theory", "yang", "--samples", "5"];
    assert_eq!(json(&run(&args, None))["seed"], 7);
    assert_eq!(json(&run(&args, Some("19")))["seed"], 19);
    let explicit = ["yb-check", "--theory", "yang", "--samples", "5", "--seed", "3"];
    assert_eq!(json(&run(&explicit, Some("19")))["seed"], 3);
}

#[test]
fn commands_are_deterministic() {
    let args = ["laws", "--operad", "all", "--samples", "40", "--seed", "5"];
    assert_eq!(run(&args, None).stdout, run(&args, None).stdout);
}

#[test]
fn compose_prints_to_stdout_and_reloads() {
    let out = run(
        &[
            "compose",
            &fixture("concurrent_p.json"),
            "1",
            &fixture("concurrent_q.json"),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let doc = arrangeops::io::Document::parse(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(doc.payload.arity(), 3);
    let lines = &json(&out)["arrangement"]["lines"];
    assert_eq!(lines[1]["q"], "-1/2");
    assert_eq!(lines[1]["p"], "1/2");
}

#[test]
fn companion_operads_compose() {
    let out = run(
        &["compose", &fixture("tiling_a.json"), "2", &fixture("tiling_b.json")],
        None,
    );
    assert_eq!(
        json(&out)["tiling"],
        serde_json::json!(["11/50", "19/250", "38/125", "2/5"])
    );
    let out = run(
        &["compose", &fixture("points.json"), "1", &fixture("points.json")],
        None,
    );
    assert_eq!(json(&out)["points"], serde_json::json!(["0", "1/2", "1", "2"]));
    let out = run(&["compose", &fixture("chain.json"), "2", &fixture("chain.json")], None);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["compose", &fixture("chain.json"), "1", &fixture("points.json")], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyses_report_json() {
    let g = fixture("generic4.json");
    assert_eq!(json(&run(&["regions", &g], None))["bounded_regions"], 3);
    assert_eq!(
        json(&run(&["reduced-word", &g], None))["word"]
            .as_array()
            .unwrap()
            .len(),
        6
    );
    assert_eq!(
        json(&run(&["classify", &fixture("middle_left.json")], None))["type"],
        "middle_left"
    );
    assert_eq!(run(&["classify", &g], None).status.code(), Some(2));
    let dec = json(&run(&["decompose", &g], None));
    assert_eq!(dec["generators"].as_array().unwrap().len(), 2);
    let env = json(&run(&["envelope", &g], None));
    assert_eq!(env["vertices"][0], serde_json::json!(["0", "0"]));
    let chain = json(&run(&["permutahedron", &fixture("concurrent_p.json")], None));
    assert_eq!(chain["events"][0]["blocks"], serde_json::json!([[1, 2, 3]]));
    let norm = json(&run(&["normalize", &g], None));
    assert_eq!(norm["tuple"].as_array().unwrap().len(), 3);
}

#[test]
fn projection_lands_on_the_point() {
    let out = run(&["project", &fixture("generic4.json"), "--at", "1/2,3"], None);
    let doc = arrangeops::io::Document::parse(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    match doc.payload {
        arrangeops::io::Payload::Arrangement(a) => {
            let x = a.concurrency_point().unwrap();
            assert_eq!(arrangeops::rational::format_rational(&x.q), "1/2");
            assert_eq!(arrangeops::rational::format_rational(&x.t), "3");
        }
        _ => panic!("expected an arrangement"),
    }
    assert_eq!(
        run(&["project", &fixture("generic4.json"), "--at", "0,0"], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn svg_without_envelope_has_no_polyline() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.svg");
    let out = run(
        &["render", &fixture("concurrent_p.json"), "--out", path.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    assert_eq!(doc.descendants().filter(|n| n.has_tag_name("polyline")).count(), 0);
    assert_eq!(doc.descendants().filter(|n| n.has_tag_name("circle")).count(), 1);
    let out = run(
        &["render", &fixture("tiling_a.json"), "--out", path.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let out = run(
        &["render", &fixture("generic4.json"), "--out", "/nonexistent-dir/x.svg"],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
}
