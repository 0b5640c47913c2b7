use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn ehr(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ehr")).args(args).output().expect("ehr runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, _) = ehr(&full);
    (code, serde_json::from_str(&out).expect("valid JSON"))
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ehr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn de_barros_law_fails_on_orderless_band() {
    let (code, out, _) = ehr(&["check", "example://orderless-band", "--law", "de-barros"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("de-barros: fails"), "{out}");
}

#[test]
fn ladder_on_orderless_band() {
    let (code, report) = json(&["check", "example://orderless-band"]);
    assert_eq!(code, 0);
    let verdict = |law: &str| {
        report["laws"].as_array().unwrap().iter().find(|l| l["law"] == law).unwrap()["holds"].as_bool().unwrap()
    };
    assert!(verdict("ehresmann"));
    assert!(!verdict("de-barros"));
    assert_eq!(report["structure"]["size"], 6);
    assert_eq!(report["structure"]["has_order"], false);
}

#[test]
fn order_count_of_two_element_monoid() {
    let (code, out, _) = ehr(&["orders", "example://two-element-monoid", "--count-only"]);
    assert_eq!((code, out.as_str()), (0, "2\n"));
}

#[test]
fn esn_on_rel_two() {
    let (code, report) = json(&["esn", "example://rel-2"]);
    assert_eq!(code, 0);
    assert_eq!(report["laws"][0]["law"], "esn-round-trip");
    assert_eq!(report["laws"][0]["holds"], true);
    assert_eq!(report["artifacts"]["correspondences"].as_array().unwrap().len(), 8);
}

#[test]
fn report_schema() {
    let (_, report) = json(&["check", "example://two-element-monoid#leq1"]);
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["command"], "check");
    assert_eq!(report["source"], "example://two-element-monoid#leq1");
    assert_eq!(report["structure"]["kind"], "semigroup");
    assert_eq!(report["exit_code"], 0);
    assert!(report.get("error").is_none());
    let os4 = report["laws"].as_array().unwrap().iter().find(|l| l["law"] == "OS4").unwrap();
    assert_eq!(os4["witness"], serde_json::json!([1, 0]));
}

#[test]
fn emitted_example_reads_back() {
    let (code, text, _) = ehr(&["example", "zero-one-nabla", "--emit"]);
    assert_eq!(code, 0);
    let path = temp_file("nabla.txt", &text);
    let (code, report) = json(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["structure"]["size"], 3);
    assert_eq!(report["structure"]["has_order"], true);
}

#[test]
fn parse_errors_exit_two() {
    let path = temp_file("bad.txt", "elements: 0 1\nmul:\n0 0\n0 x\nD: 0 1\nR: 0 1\n");
    let (code, out, err) = ehr(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("line 4"), "{err}");

    let (code, report) = json(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(report["exit_code"], 2);
    assert!(report["error"].as_str().unwrap().contains("line 4"));
}

#[test]
fn antisymmetry_is_a_parse_error() {
    let text = "elements: 0 1\nmul:\n0 0\n0 1\nD: 0 1\nR: 0 1\norder:\n0 <= 1\n1 <= 0\n";
    let path = temp_file("cycle.txt", text);
    assert_eq!(ehr(&["check", path.to_str().unwrap()]).0, 2);
}

#[test]
fn unknown_names_exit_two() {
    assert_eq!(ehr(&["check", "example://no-such"]).0, 2);
    assert_eq!(ehr(&["check", "example://rel-2", "--law", "no-such-law"]).0, 2);
    assert_eq!(ehr(&["cat", "example://rel-2", "--check", "OC99"]).0, 2);
    assert_eq!(ehr(&["frobnicate"]).0, 2);
    assert_eq!(ehr(&["check", "/no/such/file"]).0, 2);
}

#[test]
fn too_large_requests_exit_two() {
    assert_eq!(ehr(&["enumerate", "--size", "4"]).0, 2);
    assert_eq!(ehr(&["example", "rel-4"]).0, 2);
}

#[test]
fn order_laws_need_an_order() {
    let (code, _, err) = ehr(&["check", "example://orderless-band", "--law", "OS4"]);
    assert_eq!(code, 2);
    assert!(err.contains("order"), "{err}");
}

#[test]
fn derive_orders() {
    let (code, out, _) = ehr(&["derive", "example://two-element-monoid", "--order", "e"]);
    assert_eq!(code, 0);
    // equality has no covers; the attached order is checked against it
    assert_eq!(out, "order e:\nleq-e-containment: holds\n");
    let (_, report) = json(&["derive", "example://rel-2", "--order", "l"]);
    assert!(!report["artifacts"]["covers"].as_array().unwrap().is_empty());
}

#[test]
fn category_checks() {
    let (code, report) = json(&["cat", "example://rel-2", "--check", "OC6", "--check", "OC4"]);
    assert_eq!(code, 1);
    assert_eq!(report["laws"][0]["holds"], true);
    assert_eq!(report["laws"][1]["holds"], false);
    assert_eq!(report["artifacts"]["identities"].as_array().unwrap().len(), 4);

    let (code, report) = json(&["cat", "example://pt-2", "--biaction"]);
    assert_eq!(code, 0);
    assert_eq!(report["artifacts"]["properties"]["epi"], true);
    assert!(report["artifacts"]["biaction"]["left"].is_array());
}

#[test]
fn emitted_category_reads_back() {
    let (code, text, _) = ehr(&["cat", "example://zero-one-nabla", "--emit", "--check", "OC6"]);
    assert_eq!(code, 0);
    let body: String = text.lines().filter(|l| !l.starts_with("OC6")).map(|l| format!("{l}\n")).collect();
    assert!(body.starts_with("kind: category"));
    let path = temp_file("cat.txt", &body);
    let (code, report) = json(&["esn", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{report}");
    assert_eq!(report["structure"]["kind"], "category");
}

#[test]
fn enumerate_with_filters() {
    let (code, report) = json(&["enumerate", "--size", "3", "--up-to-iso"]);
    assert_eq!(code, 0);
    assert_eq!(report["artifacts"]["count"], 15);
    let (_, restricted) = json(&["enumerate", "--size", "3", "--up-to-iso", "--filter", "restriction"]);
    let (_, functional) =
        json(&["enumerate", "--size", "3", "--up-to-iso", "--filter", "restriction", "--filter", "functional"]);
    let count = |v: &Value| v["artifacts"]["count"].as_u64().unwrap();
    assert!(count(&functional) <= count(&restricted) && count(&restricted) <= 15);
}

#[test]
fn sweep_report() {
    let (code, report) = json(&["sweep", "--max-size", "2"]);
    assert_eq!(code, 0);
    assert_eq!(report["artifacts"]["sweep"]["structures"], serde_json::json!([1, 6]));
    assert_eq!(report["laws"].as_array().unwrap().len(), 9);
}

#[test]
fn example_listing() {
    let (code, out, _) = ehr(&["example", "two-element-monoid"]);
    assert_eq!(code, 0);
    assert!(out.contains("leq1, leq2"), "{out}");
}
