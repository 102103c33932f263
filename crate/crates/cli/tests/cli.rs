use std::path::PathBuf;
use std::process::{Command, Output};

use metgraph_cli::{run, Command as Cmd, Method, OutputMode, RunConfig, EXIT_INPUT, EXIT_OK};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn metgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_metgraph")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = metgraph(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn path(name: &str) -> String {
    data(name).to_str().unwrap().to_string()
}

/// Exact output is made of integers and p/q tokens only.
fn assert_no_decimals(s: &str) {
    assert!(!s.contains('.'), "{s}");
}

#[test]
fn tau_of_circle() {
    assert_eq!(stdout(&["tau", &path("circle.json")]), "1/6\n");
}

#[test]
fn tesseract_epsilon_both_ways() {
    assert_eq!(
        stdout(&["epsilon", "--method", "both", &path("tesseract.json")]),
        "7875/122\n7875/122\nMATCH\n"
    );
    assert_eq!(stdout(&["epsilon", "--method", "resistance", &path("tesseract.json")]), "7875/122\n");
}

#[test]
fn resistance_and_green_on_circle() {
    assert_eq!(stdout(&["resistance", "--x", "0:0", "--y", "0:1/2", &path("circle.json")]), "3/8\n");
    assert_eq!(stdout(&["green", "--x", "0:0", "--y", "0:1/2", &path("circle.json")]), "-1/48\n");
    assert_eq!(
        stdout(&["green", "--x", "0:0", "--y", "0:1/2", "--decimal", "4", &path("circle.json")]),
        "-1/48 ~ -0.0208\n"
    );
}

#[test]
fn matrices_print_row_per_line() {
    assert_eq!(stdout(&["laplacian", &path("circle.json")]), "4 -2 -2\n-2 3 -1\n-2 -1 3\n");
    let pinv = stdout(&["pinv", &path("circle.json")]);
    assert_eq!(pinv, "1/9 -1/18 -1/18\n-1/18 11/72 -7/72\n-1/18 -7/72 11/72\n");
}

#[test]
fn value_matrix_lines() {
    let out = stdout(&["value-matrix", &path("circle.json")]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[0], "z[0][0] = 1/6 + 1/4*x^2 + 1/4*y^2 - 1/2*x*y - 1/2*|x-y|");
    assert_eq!(lines[6], "z[2][0] = -1/48 - 1/4*x + 1/4*y + 1/4*x^2 + 1/4*y^2 - 1/2*x*y");
    assert_no_decimals(&out);
    let joint = stdout(&["value-matrix", &path("joint_circles.json")]);
    assert_eq!(joint.lines().count(), 36);
    assert_no_decimals(&joint);
}

#[test]
fn divisor_flag_overrides_file() {
    let file = stdout(&["epsilon", &path("joint_circles.json")]);
    let zero = stdout(&["epsilon", "--divisor", "0,0,0,0,0", &path("joint_circles.json")]);
    assert_eq!(zero, "0\n0\nMATCH\n");
    assert_ne!(file, zero);
    let negative = stdout(&["green", "--divisor", "-1,0,0,0,0", "--x", "0:0", "--y", "0:0", &path("joint_circles.json")]);
    assert!(!negative.trim().is_empty());
}

#[test]
fn check_passes_on_examples() {
    for name in ["circle.json", "joint_circles.json", "banana.json", "two_bridges.json", "segment.json"] {
        let out = stdout(&["check", &path(name)]);
        assert_eq!(out.matches("PASS").count(), 2, "{name}: {out}");
    }
}

#[test]
fn oracle_reports_zero_differences() {
    let out = stdout(&["oracle", "--points", &path("points/circle.txt"), &path("circle.json")]);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.last().unwrap(), &"60 pairs, 0 mismatches");
    for row in &rows[..rows.len() - 1] {
        assert_eq!(row.matches("DIFF 0").count(), 2, "{row}");
    }
    assert_no_decimals(&out);
}

#[test]
fn info_shows_connectivity() {
    let out = stdout(&["info", &path("two_bridges.json")]);
    assert!(out.contains("bridges: e0 e5"));
    assert!(out.ends_with("1 1 1 1 1 110\n1 0 0 0 0 0\n1 0 0 0 0 0\n1 0 0 0 0 0\n1 0 0 0 0 0\n1 0 0 0 0 1\n"));
}

#[test]
fn inadequate_input_is_refined() {
    let out = metgraph(&["info", &path("circle_line.json")]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("refined to 4 vertices"));
    // points refer to the file's edges: the middle of the length-2 arc
    let r = stdout(&["resistance", "--x", "1:1", "--y", "2:3", &path("circle_line.json")]);
    // 3 along the bridge, plus 1 * 2 / 3 across the circle
    assert_eq!(r, "11/3\n");
    let refined = std::env::temp_dir().join(format!("metgraph-refined-{}.json", std::process::id()));
    std::fs::write(
        &refined,
        r#"{"vertices":["p1","p2","p3","m"],"edges":[
            {"from":0,"to":1,"length":1},{"from":0,"to":3,"length":1},
            {"from":3,"to":1,"length":1},{"from":1,"to":2,"length":3}],
            "divisor":[1,1,1,0]}"#,
    )
    .unwrap();
    let by_hand = stdout(&["epsilon", refined.to_str().unwrap()]);
    std::fs::remove_file(&refined).ok();
    assert_eq!(stdout(&["epsilon", &path("circle_line.json")]), by_hand);
}

#[test]
fn machine_output_is_json() {
    let out = stdout(&["pinv", "--machine", &path("circle.json")]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["matrix"][1][1], "11/72");
    let out = stdout(&["epsilon", "--machine", &path("banana.json")]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["green"], "12/11");
    assert_eq!(doc["match"], true);
    let out = stdout(&["value-matrix", "--machine", &path("segment.json")]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["entries"][0]["c0"], "1/4");
    assert_eq!(doc["entries"][0]["cabs"], "-1/2");
    let out = stdout(&["check", "--machine", &path("circle.json")]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["pass"], true);
}

#[test]
fn input_errors_exit_with_2() {
    let dir = std::env::temp_dir().join(format!("metgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("zero.json", r#"{"vertices":["p","q"],"edges":[{"from":0,"to":1,"length":"0"}]}"#, "nonpositive length"),
        ("dangling.json", r#"{"vertices":["p","q"],"edges":[{"from":0,"to":5,"length":"1"}]}"#, "vertex 5"),
        ("bad.json", "{\"vertices\":[\"p\",\"q\"],\n\"edges\":[{\"from\":0,\"to\":1,\"length\":\"2/0\"}]}", "edges[0].length"),
        ("short.json", r#"{"vertices":["p","q"],"edges":[{"from":0,"to":1,"length":"1"}],"divisor":[1]}"#, "coefficients"),
    ];
    for (name, body, needle) in cases {
        let file = dir.join(name);
        std::fs::write(&file, body).unwrap();
        let out = metgraph(&["tau", file.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{name}: {err}");
    }
    let bad = dir.join("bad.json");
    let err = String::from_utf8_lossy(&metgraph(&["tau", bad.to_str().unwrap()]).stderr).to_string();
    assert!(err.contains("line 2"), "{err}");

    let out = metgraph(&["value-matrix", "--divisor", "-2,0,0", &path("circle.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree -2"));
    let out = metgraph(&["green", "--x", "7:0", "--y", "0:0", &path("circle.json")]);
    assert_eq!(out.status.code(), Some(2));
    let out = metgraph(&["green", "--x", "0:1", "--y", "0:0", &path("circle.json")]);
    assert_eq!(out.status.code(), Some(2), "offset past the end of a length 1/2 edge");
    let out = metgraph(&["tau", &path("missing.json")]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn run_writes_to_the_given_streams() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let cfg = RunConfig {
        input: data("banana.json"),
        command: Cmd::Epsilon { method: Method::Green },
        divisor: None,
        output: OutputMode::Decimal(3),
    };
    assert_eq!(run(&cfg, &mut out, &mut err), EXIT_OK);
    assert_eq!(String::from_utf8(out).unwrap(), "12/11 ~ 1.091\n");
    assert!(err.is_empty());

    let cfg = RunConfig { divisor: Some("1,x".into()), ..cfg };
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(run(&cfg, &mut out, &mut err), EXIT_INPUT);
    assert!(String::from_utf8(err).unwrap().contains("divisor"));
}
