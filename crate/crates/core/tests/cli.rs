use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn kwsgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kwsgp"))
        .args(args)
        .env_remove("KWSGP_CAP")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden(id: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/{id}.csv"));
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn analyze_reports_invariants() {
    let out = kwsgp(&["analyze", "--gens", "5,7,11,13", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["schema"], "kwsgp/1");
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["status"], "pass");
    let r = &v["result"];
    assert_eq!(r["type"], 3);
    assert_eq!(r["mu"], 6);
    assert_eq!(r["frobenius"], 9);
    let diag: Vec<i64> = (0..4)
        .map(|i| r["principal_matrix"]["entries"][i][i].as_i64().unwrap())
        .collect();
    assert_eq!(diag, [-4, -3, -2, -2]);
}

#[test]
fn analyze_is_byte_deterministic() {
    let a = kwsgp(&[
        "analyze",
        "--kw",
        "7,9",
        "--corners",
        "1:3,2:2,3:1",
        "--json",
        "--apery",
    ]);
    let b = kwsgp(&[
        "analyze",
        "--kw",
        "7,9",
        "--corners",
        "1:3,2:2,3:1",
        "--json",
        "--apery",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("{\n  \"command\""));
    assert!(text.ends_with("}\n"));
}

#[test]
fn analyze_small_cases() {
    let v = json_of(&kwsgp(&["analyze", "--gens", "2,3", "--json"]));
    assert_eq!(v["result"]["frobenius"], 1);
    let v = json_of(&kwsgp(&[
        "analyze",
        "--kw",
        "5,7",
        "--corners",
        "2:2,3:1",
        "--json",
    ]));
    assert_eq!(v["result"]["generators"], serde_json::json!([5, 7, 11, 13]));
    assert_eq!(v["result"]["kw"]["case"], "i");
}

#[test]
fn input_errors_exit_2_with_error_object() {
    for (args, kind) in [
        (vec!["analyze", "--gens", "4,6"], "NonCoprime"),
        (vec!["analyze", "--gens", "0,5"], "NonPositive"),
        (vec!["analyze", "--gens", "5,x"], "InvalidSpec"),
        (vec!["analyze"], "InvalidSpec"),
        (
            vec!["analyze", "--kw", "5,7", "--corners", "1:1:1"],
            "InvalidSpec",
        ),
        (vec!["table", "type-9-9"], "UnknownTable"),
        (vec!["render", "--gens", "5,7"], "InvalidSpec"),
        (vec!["analyze", "--kw3", "4,6,1,1,3"], "NonCoprime"),
    ] {
        let out = kwsgp(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let v = json_of(&out);
        assert_eq!(v["status"], "error");
        assert_eq!(v["error"]["kind"], kind, "{args:?}");
    }
    let out = kwsgp(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["kind"], "Usage");
}

#[test]
fn verify_exit_codes() {
    let out = kwsgp(&[
        "verify",
        "--kw",
        "5,7",
        "--theorem",
        "presentation",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let check = &json_of(&out)["result"]["checks"][0];
    assert_eq!(
        (check["total"].as_u64(), check["passed"].as_u64()),
        (Some(10), Some(10))
    );

    let out = kwsgp(&["verify", "--kw", "8,9", "--theorem", "principal"]);
    assert_eq!(out.status.code(), Some(0));

    let out = kwsgp(&[
        "verify",
        "--kw3",
        "9,11,2,1,4",
        "--theorem",
        "type3",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let check = &json_of(&out)["result"]["checks"][0];
    assert_eq!(check["failed"], 0);
    assert!(check["passed"].as_u64().unwrap() > 0);
}

#[test]
fn verify_failure_dumps_first_counterexample() {
    let out = kwsgp(&[
        "verify",
        "--kw",
        "8,9",
        "--theorem",
        "presentation",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["status"], "fail");
    let first = &v["result"]["checks"][0]["first_counterexample"];
    assert_eq!(first["key"], "[1:4]");
    assert_eq!(first["report"]["generators"], serde_json::json!([8, 9, 28]));
}

#[test]
fn cap_from_flag_and_environment() {
    let out = kwsgp(&["enumerate", "--kw", "5,7", "--cap", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["kind"], "CapExceeded");

    let out = Command::new(env!("CARGO_BIN_EXE_kwsgp"))
        .args(["enumerate", "--kw", "5,7"])
        .env("KWSGP_CAP", "9")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = kwsgp(&["enumerate", "--kw", "5,7", "--cap", "10", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["result"]["count"], 10);
}

#[test]
fn tables_match_golden_files_where_values_agree() {
    for id in ["type-5-7", "mu2-5-7"] {
        let out = kwsgp(&["table", id]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(id));
    }
    // Only h = 103 differs from the golden mu table.
    let out = String::from_utf8(kwsgp(&["table", "mu-5-7"]).stdout).unwrap();
    let expected = golden("mu-5-7");
    let diff: Vec<(&str, &str)> = out
        .lines()
        .zip(expected.lines())
        .filter(|(a, b)| a != b)
        .collect();
    assert_eq!(diff, [("103,6", "103,7")]);
}

#[test]
fn render_outputs() {
    let out = kwsgp(&["render", "--kw", "5,7", "--corners", "2:2,3:1"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 2);

    let svg = String::from_utf8(kwsgp(&["render", "--kw", "5,7", "--corners", ""]).stdout).unwrap();
    assert!(svg.contains("boundary") && !svg.contains("<circle"));

    let v = json_of(&kwsgp(&[
        "render",
        "--kw3",
        "5,7,2,1,3",
        "--points",
        "2:0:0",
    ]));
    assert_eq!(v["result"]["gap_count"], 52);
    assert_eq!(v["result"]["adjoined"][0]["value"], 73);
    assert_eq!(
        v["result"]["adjoined"][0]["point"],
        serde_json::json!({"x": 2, "y": 0, "z": 0})
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("kwsgp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("type.csv");
    let out = kwsgp(&["table", "type-5-7", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("type-5-7"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn enumerate_csv() {
    let out = String::from_utf8(kwsgp(&["enumerate", "--kw", "5,7", "--csv"]).stdout).unwrap();
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("key,kind,generators"));
    assert_eq!(lines.count(), 10);
    assert!(out.contains("\"[2:2,3:1]\",corners,5 7 11 13"));
}
