use std::path::PathBuf;
use std::process::{Command, Output};

fn codesign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codesign")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("codesign-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn build_then_generalized_am() {
    let code = scratch("cf.code");
    let built = codesign(&["build", "vectorial", "--field", "2 6", "--f", "e=3,k=1,l=3", "--out", code.to_str().unwrap()]);
    assert_eq!(built.status.code(), Some(0));
    let report = json(&built);
    assert_eq!(report["schema"], 1);
    assert_eq!(report["params"], serde_json::json!([64, 10, 28]));
    assert_eq!(report["match"]["predicted"], true);

    let gen = codesign(&["am", "generalized", "--code", code.to_str().unwrap(), "--t", "2", "--S", "28,36"]);
    assert_eq!(gen.status.code(), Some(0));
    assert_eq!(json(&gen)["verdict"], "yes");
    let again = codesign(&["am", "generalized", "--code", code.to_str().unwrap(), "--t", "2", "--S", "28,36"]);
    assert_eq!(gen.stdout, again.stdout);

    let classic = codesign(&["am", "classic", "--code", code.to_str().unwrap(), "--t", "2"]);
    assert_eq!(json(&classic)["verdict"], "no");
}

#[test]
fn design_extract_and_verify() {
    let code = scratch("df.code");
    let design = scratch("b16.json");
    let built = codesign(&["build", "bent-support", "--field", "2 6 1 0 1 1 0 1 1", "--f", "e=3,k=1,l=1", "--out", code.to_str().unwrap()]);
    assert_eq!(built.status.code(), Some(0));
    assert_eq!(json(&built)["distribution"]["enumerator"], "1+63z^16+63z^20+z^36");
    let ex = codesign(&["design", "extract", "--code", code.to_str().unwrap(), "--weight", "16", "--out", design.to_str().unwrap()]);
    assert_eq!(ex.status.code(), Some(0));
    let v = codesign(&["design", "verify", "--design", design.to_str().unwrap(), "--t", "2"]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(json(&v)["lambda"], 12);
    let v3 = codesign(&["design", "verify", "--design", design.to_str().unwrap(), "--t", "3"]);
    assert_eq!(v3.status.code(), Some(1));
}

#[test]
fn moments_and_predictions_from_files() {
    let code = scratch("k5.code");
    let dist = scratch("k5.json");
    let dual = scratch("k5dual.json");
    let fn_file = scratch("k5.fn");
    let fam = codesign(&["fn", "family", "kasami", "--n", "5", "--i", "2", "--out", fn_file.to_str().unwrap()]);
    assert_eq!(fam.status.code(), Some(0));
    let built = codesign(&["build", "vectorial", "--fn", fn_file.to_str().unwrap(), "--out", code.to_str().unwrap()]);
    assert_eq!(built.status.code(), Some(0));
    let wd = codesign(&["code", "wdist", "--code", code.to_str().unwrap(), "--out", dist.to_str().unwrap()]);
    assert_eq!(wd.status.code(), Some(0));
    let dd = codesign(&["code", "dual", "--code", code.to_str().unwrap()]);
    std::fs::write(&dual, &dd.stdout).unwrap();
    let check = codesign(&["moments", "check", "--primal", dist.to_str().unwrap(), "--dual", dual.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    let p = codesign(&["predict", "shorten", "--dist", dist.to_str().unwrap(), "--t", "1"]);
    assert_eq!(p.status.code(), Some(0));
    assert_eq!(json(&p)["counts"][12], 310);
    let diff = codesign(&["fn", "diffspec", "--fn", fn_file.to_str().unwrap()]);
    let diff = json(&diff);
    assert_eq!(diff["values"], serde_json::json!([0, 2]));
    assert_eq!(diff["fourth_moment_equal"], true);
    let walsh = json(&codesign(&["fn", "walsh", "--fn", fn_file.to_str().unwrap()]));
    assert_eq!(walsh["values"], serde_json::json!([-8, 0, 8]));
}

#[test]
fn tables_steiner_and_exit_codes() {
    let t = codesign(&["predict", "table", "--family", "vbent-code", "--params", "3,3"]);
    assert_eq!(json(&t)["enumerator"], "1+448z^28+126z^32+448z^36+z^64");
    let s = codesign(&["steiner", "--field", "2 6", "--f", "e=5"]);
    let s = json(&s);
    assert_eq!(s["total_blocks"], 336);
    assert_eq!(s["lambda"], 1);
    assert_eq!(codesign(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(codesign(&["fn", "family", "kasami", "--n", "6", "--i", "2"]).status.code(), Some(2));
    assert_eq!(codesign(&["--budget-codewords", "8", "build", "ternary", "--m", "3"]).status.code(), Some(3));
    let repro = codesign(&["repro", "paper-examples", "--subset", "bent-n6"]);
    assert_eq!(repro.status.code(), Some(0));
    assert_eq!(json(&repro)["passed"], true);
}
