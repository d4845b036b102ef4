use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn plates(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plates"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn without_millis(mut v: Value) -> Value {
    for e in v["entries"].as_array_mut().unwrap() {
        e.as_object_mut().unwrap().remove("wallMillis");
    }
    v
}

#[test]
fn single_case_report() {
    let out = plates(&[
        "verify",
        "pt-sum",
        "--case",
        "six-ordered-pairs",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["name"], "pt-sum/six-ordered-pairs");
    assert_eq!(entries[0]["status"], "pass");
    assert!(entries[0]["wallMillis"].is_u64());
    assert_eq!(v["inputDigest"].as_str().unwrap().len(), 64);
    assert!(v["toolVersion"].as_str().unwrap().starts_with("plates"));
}

#[test]
fn output_is_deterministic() {
    let a = plates(&["verify", "plate"]);
    let b = plates(&["verify", "plate"]);
    assert_eq!(without_millis(json(&a)), without_millis(json(&b)));
    let c = plates(&["verify", "corollary"]);
    assert_ne!(json(&a)["inputDigest"], json(&c)["inputDigest"]);
}

#[test]
fn failing_suite_exits_one() {
    let out = plates(&["verify", "straightening"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let statuses: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["status"].as_str().unwrap())
        .collect();
    assert_eq!(statuses, vec!["pass", "fail"]);
    assert!(v["entries"][1]["witness"]
        .as_str()
        .unwrap()
        .contains("tabulated"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(plates(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(
        plates(&["verify", "rep", "--case", "missing"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(plates(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        plates(&["--dot", "x.dot", "verify", "rep"]).status.code(),
        Some(2)
    );
    assert_eq!(
        plates(&["sum", "nine", "--constraints", "/nonexistent/file.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn dot_file_for_weight_permutohedron() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.dot");
    let out = plates(&[
        "polytope",
        "edges",
        "--target",
        "weight-perm",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot = fs::read_to_string(&path).unwrap();
    let nodes = dot
        .lines()
        .filter(|l| l.ends_with("\";") && !l.contains(" -- "))
        .count();
    assert_eq!(nodes, 90);
    let v = json(&out);
    assert_eq!(v["data"]["vertexCount"], 90);
    assert_eq!(v["data"]["edgeDirections"].as_array().unwrap().len(), 8);
}

#[test]
fn seed_points_feed_the_jacobian() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pts.json");
    fs::write(&path, r#"[[1,2,3,4,5,6],["1/2","-3/7",5,11,13,"2/9"]]"#).unwrap();
    let out = plates(&[
        "--seed-points",
        path.to_str().unwrap(),
        "verify",
        "jacobian",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["entries"][0]["witness"]
        .as_str()
        .unwrap()
        .contains("[4, 4]"));
    fs::write(&path, "[[1,2,3]]").unwrap();
    assert_eq!(
        plates(&[
            "--seed-points",
            path.to_str().unwrap(),
            "verify",
            "jacobian"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn constrained_sums_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let six = dir.path().join("six.json");
    fs::write(&six, r#"{"n": 6, "chain": [[1,6],[2,4],[3,5]]}"#).unwrap();
    let out = plates(&["sum", "positions", "--constraints", six.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["data"]["termCount"], 8);
    assert_eq!(v["data"]["squareRoot"]["pairing"], "16,24,35");
    assert_eq!(
        plates(&["sum", "nine", "--constraints", six.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let triples = dir.path().join("t.json");
    fs::write(
        &triples,
        r#"{"tripleCycles": [[1,2,3],[2,5,6],[3,4,6],[4,5,1]]}"#,
    )
    .unwrap();
    let out = plates(&["sum", "cyclic", "--constraints", triples.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["data"]["cycles"].as_array().unwrap().len(), 7);
    assert_eq!(v["data"]["squareRoot"]["sign"], -1);
}

#[test]
fn plate_cone_in_both_forms() {
    let out = plates(&["cone", "plate"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["data"]["h"]["ineq"].as_array().unwrap().len(), 8);
    assert_eq!(v["data"]["v"]["rays"].as_array().unwrap().len(), 8);

    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    let r = dir.path().join("r.json");
    fs::write(&h, r#"{"ineq": [[1,0]]}"#).unwrap();
    fs::write(&r, r#"{"rays": [[1,0],[0,1],[0,-1]]}"#).unwrap();
    let out = plates(&["cone", "rays", "--input", h.to_str().unwrap()]);
    assert_eq!(json(&out)["data"]["rays"].as_array().unwrap().len(), 3);
    let out = plates(&[
        "cone",
        "equal",
        "--h",
        h.to_str().unwrap(),
        "--v",
        r.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn text_format_lists_entries() {
    let out = plates(&["--format", "text", "verify", "segre"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS segre/cubic-vanishes"));
    assert!(text.contains("2 checks, 0 failed"));
}

#[test]
fn lumping_and_support() {
    let v = json(&plates(&["polytope", "lumping", "--target", "c-polytope"]));
    assert_eq!(v["data"]["imageSize"], 6);
    assert_eq!(v["data"]["isPermutohedron"], true);
    let v = json(&plates(&[
        "polytope",
        "lumping",
        "--target",
        "c-polytope",
        "--blocks",
        "1,2,3;4,5,6",
    ]));
    assert_eq!(v["data"]["blocks"].as_array().unwrap().len(), 2);
    let out = plates(&["polytope", "support"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["entries"].as_array().unwrap().len(), 2);
}
