use std::process::{Command, Output};

fn superkm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superkm")).args(args).output().expect("superkm runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn value<'a>(report: &'a serde_json::Value, name: &str) -> &'a str {
    report["values"].as_array().unwrap().iter().find(|v| v["name"] == name).unwrap()["value"].as_str().unwrap()
}

#[test]
fn worked_example_from_a_preset_path() {
    let out = superkm(&[
        "form",
        "--datum",
        "presets/odd-sl2.json",
        "--lambda",
        "0",
        "--a",
        "+i -i",
        "--b",
        "",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["command"], "form");
    assert_eq!(r["datum"], "odd-sl2");
    assert_eq!(value(&r, "cq_form"), "plus=q/(1 - q^2); minus=q/(1 + q^2)");
    assert_eq!(value(&r, "cq_form"), value(&r, "graphical_form"));
    assert_eq!(value(&r, "match"), "true");
    let check = &r["checks"][0];
    for key in ["name", "paper_ref", "status", "detail"] {
        assert!(check.get(key).is_some(), "missing {key}");
    }
    assert_eq!(check["status"], "pass");
}

#[test]
fn weight_mismatch_pairs_to_zero() {
    let out = superkm(&["form", "--lambda", "0", "--a", "+i -i", "--b", "+i", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(value(&r, "cq_form"), "plus=0; minus=0");
    assert_eq!(value(&r, "match"), "true");
}

#[test]
fn validate_file_and_preset() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/presets/odd-b2.json");
    assert_eq!(superkm(&["validate", "--datum", path]).status.code(), Some(0));
    assert_eq!(superkm(&["validate", "--datum", "sl3"]).status.code(), Some(0));
}

#[test]
fn invalid_datum_fails_validation() {
    let dir = std::env::temp_dir().join(format!("superkm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"indices": [{"name": "i", "parity": 1, "d_i": 1}, {"name": "j", "parity": 0, "d_i": 1}],
            "d": [[-2, -1], [-1, -2]], "t": {}, "s": [], "bar_consistent": true}"#,
    )
    .unwrap();
    let out = superkm(&["validate", "--datum", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["checks"][0]["status"], "fail");
}

#[test]
fn parse_errors_exit_with_two() {
    assert_eq!(superkm(&["form", "--lambda", "0", "--a", "+x", "--b", ""]).status.code(), Some(2));
    assert_eq!(superkm(&["form", "--lambda", "0,1", "--a", "", "--b", ""]).status.code(), Some(2));
    assert_eq!(superkm(&["validate", "--datum", "no-such-datum"]).status.code(), Some(2));
    assert_eq!(superkm(&["lint", "--lambda-range", "3..1"]).status.code(), Some(2));
    assert_eq!(superkm(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn series_window_follows_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_superkm"))
        .args(["form", "--lambda", "1", "--a", "-i +i", "--b", "-i +i", "--format", "json"])
        .env("SUPERKM_PRECISION", "0..4")
        .output()
        .unwrap();
    let r = json(&out);
    assert_eq!(value(&r, "series on [0,4]"), "plus=1 + 2q^2 + 4q^4 [q^0..q^4]; minus=1 - 2q^2 + 4q^4 [q^0..q^4]");
}

#[test]
fn matchings_list_every_pairing() {
    let out = superkm(&[
        "matchings",
        "--datum",
        "sl3",
        "--lambda",
        "0,1",
        "--a",
        "+1 -1 +2",
        "--b",
        "+2 -1 +1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let rows = r["matchings"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["crossings"], 3);
}

#[test]
fn lint_and_qhsa_on_one_datum() {
    let out = superkm(&["lint", "--datum", "odd-sl2", "--lambda-range", "-1..1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["checks"].as_array().unwrap().len() >= 18);
    assert_eq!(superkm(&["qhsa", "--n", "3", "--datum", "odd-sl2"]).status.code(), Some(0));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("superkm-report-{}.json", std::process::id()));
    let out = superkm(&["validate", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"command\": \"validate\""));
}
