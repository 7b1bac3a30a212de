//! End-to-end tests of the binary: exit-code contract, pinned output
//! formats, and input validation.

use std::process::{Command, Output};

use lattice_triangles::lattice::{gcd_with_modulus, BiPair};
use lattice_triangles::plot::parse_pairs_csv;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lattice-triangles"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn pairs_small_windows_csv() {
    let out = run(&["pairs", "--n-max", "4", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "b,i\n3,0\n3,1\n4,0\n4,1\n5,0\n6,0\n");

    let out = run(&["pairs", "--n-max", "1"]);
    assert_eq!(stdout(&out), "b,i\n3,0\n");
}

#[test]
fn pairs_csv_roundtrip_is_byte_identical() {
    let out = run(&["pairs", "--n-max", "50"]);
    let text = stdout(&out);
    let mut parsed = parse_pairs_csv(&text).unwrap();
    parsed.sort();
    parsed.dedup();
    let mut rebuilt = String::from("b,i\n");
    for p in &parsed {
        rebuilt.push_str(&format!("{},{}\n", p.boundary, p.interior));
    }
    assert_eq!(rebuilt, text);
}

#[test]
fn pairs_json_and_svg_formats() {
    let out = run(&["pairs", "--n-max", "4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n_max"], 4);
    assert_eq!(doc["count"], 6);
    assert_eq!(doc["pairs"][0], serde_json::json!([3, 0]));

    let out = run(&[
        "pairs", "--n-max", "60", "--format", "svg", "--b-max", "30", "--cones", "1..2",
    ]);
    assert_eq!(exit_code(&out), 0);
    let svg = stdout(&out);
    assert!(svg.starts_with("<svg "));
    assert!(svg.contains("<circle"));
    assert!(svg.contains("stroke=\"#c0392b\""));
}

#[test]
fn pairs_rejects_bad_input() {
    let out = run(&["pairs", "--n-max", "0"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["pairs", "--n-max", "ten"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["pairs", "--n-max", "10", "--shards", "0"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&[
        "pairs",
        "--n-max",
        "10",
        "--out",
        "/nonexistent-dir/pairs.csv",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn member_exit_codes_and_json() {
    let out = run(&["member", "9", "1"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["b"], 9);
    assert_eq!(doc["i"], 1);
    assert_eq!(doc["member"], true);
    // any valid witness is acceptable; re-check the gcd criterion on it
    let (a, b, c) = (
        doc["witness"]["A"].as_i64().unwrap(),
        doc["witness"]["B"].as_i64().unwrap(),
        doc["witness"]["C"].as_i64().unwrap(),
    );
    assert_eq!(a * c, 9);
    assert_eq!(a + gcd_with_modulus(b, c) + gcd_with_modulus(b - a, c), 9);

    let out = run(&["member", "20", "10"]);
    assert_eq!(exit_code(&out), 3);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["member"], false);
    assert!(doc.get("witness").is_none());

    let out = run(&["member", "3", "0"]);
    assert_eq!(exit_code(&out), 0);

    let out = run(&["member", "2", "0"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["member", "5", "-1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn check_cones_exit_codes() {
    let out = run(&["check-cones", "--b-max", "20", "--c", "2..2"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("total: 0 violations"));

    let out = run(&["check-cones", "--b-max", "10", "--c", "3..2"]);
    assert_eq!(exit_code(&out), 2);

    // the c = 1 guard is a library-level concern; the CLI range starts at 2
    let out = run(&["check-cones", "--b-max", "10", "--c", "1..2"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["check-cones", "--b-max", "2", "--c", "2..2"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn witness_families_json() {
    let out = run(&["witness", "apex", "--c", "2"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["family"], "apex");
    assert_eq!(doc["pair"]["b"], 14);
    assert_eq!(doc["pair"]["i"], 6);
    assert_eq!(
        doc["vertices"],
        serde_json::json!([[0, 0], [12, 0], [1, 2]])
    );
    assert_eq!(doc["triple"], serde_json::json!({"A": 12, "B": 1, "C": 2}));

    let out = run(&["witness", "upper", "--c", "2", "--k", "5"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["pair"]["b"], 15);
    assert_eq!(doc["pair"]["i"], 7);

    let out = run(&["witness", "lower", "--c", "2", "--b", "16", "--i", "7"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["triple"]["A"], 14);
    assert_eq!(doc["triple"]["B"], 1);

    // family-specific preconditions
    let out = run(&["witness", "upper", "--c", "2", "--k", "4"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["witness", "lower", "--c", "2", "--b", "15", "--i", "6"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["witness", "apex", "--c", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn prime_line_reports() {
    let out = run(&["prime-line", "--p-max", "100"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("checked 24 odd primes up to 100: 0 mismatches"));

    let out = run(&["prime-line", "--p-max", "3"]);
    assert!(stdout(&out).contains("p=3: (3, 1) (5, 0) ok"));

    // vacuous pass: no odd primes at or below 2
    let out = run(&["prime-line", "--p-max", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("checked 0 odd primes"));
}

#[test]
fn ehrhart_tables() {
    let out = run(&["ehrhart", "0,0", "3,0", "0,3", "--k-max", "2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("b=9 i=1 2a=9"));
    assert!(text.contains("k=0 ehrhart=1 scan=1 ok"));
    assert!(text.contains("k=1 ehrhart=10 scan=10 ok"));
    assert!(text.contains("k=2 ehrhart=28 scan=28 ok"));

    let out = run(&["ehrhart", "0,0", "1,0", "0,1", "--k-max", "3"]);
    let text = stdout(&out);
    for line in [
        "k=0 ehrhart=1",
        "k=1 ehrhart=3",
        "k=2 ehrhart=6",
        "k=3 ehrhart=10",
    ] {
        assert!(text.contains(line), "missing {line:?} in {text}");
    }

    // negative coordinates parse as vertex values, not flags
    let out = run(&["ehrhart", "-2,-1", "4,0", "1,3", "--k-max", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("k=2"));

    let out = run(&["ehrhart", "0,0", "1,0", "2,0", "--k-max", "1"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["ehrhart", "0,0", "1,0", "0,1", "--k-max=-1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn pairs_agree_with_library() {
    let out = run(&["pairs", "--n-max", "40"]);
    let parsed = parse_pairs_csv(&stdout(&out)).unwrap();
    let expected: Vec<BiPair> = lattice_triangles::realize::enumerate_pairs(40)
        .unwrap()
        .iter()
        .collect();
    assert_eq!(parsed, expected);
}
