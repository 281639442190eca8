use std::process::{Command, Output};

use serde_json::Value;

fn psl22(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psl22")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    let s = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(s.lines().last().expect("some output")).expect("json line")
}

#[test]
fn dims_reports_kac_dimension() {
    let out = psl22(&["dims", "--m", "1", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["dimension"], 96);
}

#[test]
fn export_json_round_trips_through_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    let out = psl22(&["export-json", "--m", "1", "--n", "0", "--out", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let module = psl22::export::from_json_str(&text).unwrap();
    assert_eq!(module.dim(), 32);
    assert!(module.verify_structure().passed());
    assert_eq!(psl22::export::to_json_string(&module).unwrap(), text);
}

#[test]
fn verify_exit_codes() {
    let ok = psl22(&["verify", "appendix-a", "--grid", "1", "--format", "json"]);
    assert!(ok.status.success());
    assert_eq!(json(&ok)["pass"], true);

    let printed = psl22(&["verify", "appendix-b", "--grid", "1", "--format", "json"]);
    assert_eq!(printed.status.code(), Some(1));
    assert_eq!(json(&printed)["pass"], false);

    let corrected = psl22(&["verify", "appendix-b", "--corrected", "--grid", "1", "--format", "json"]);
    assert!(corrected.status.success());
}

#[test]
fn hom_between_distinct_typicals_is_zero() {
    let out = psl22(&["hom", "--left", "K:1,2", "--right", "K:2,1", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["dim"], 0);
}

#[test]
fn classify_sl_atypical() {
    let out = psl22(&["classify", "--algebra", "sl", "--m", "1", "--n", "0", "--c", "1/2", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["parameters"]["submodule"], "S");
}

#[test]
fn twist_keeps_the_discriminant() {
    let out = psl22(&["twist", "--charges", "0,0,1", "--sl2", "1,1,0,1", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["twisted_charges"]["k"], "1/1");
    assert_eq!(v["discriminant"], v["twisted_discriminant"]);
}

#[test]
fn bad_arguments_fail_cleanly() {
    let out = psl22(&["twist", "--sl2", "1,1,1,1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}
