use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

use tensordim::spectra::EffectiveSpectrum;
use tensordim_cli::run;

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn add(&self, name: &str, contents: &str) -> String {
        let path: PathBuf = self.dir.path().join(name);
        std::fs::write(&path, contents).unwrap();
        path.display().to_string()
    }
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["tensordim".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json_result(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (code, out, _) = invoke(&all);
    (code, serde_json::from_str(&out).expect("one JSON object"))
}

const ZMOD4_X: &str = r#"{"base": {"kind": "Zmod", "n": 4}, "vars": ["x"], "relations": []}"#;
const Z_X: &str = r#"{"base": {"kind": "Z"}, "vars": ["x"], "relations": []}"#;
const Z_XY: &str = r#"{"base": {"kind": "Z"}, "vars": ["x", "y"], "relations": []}"#;

#[test]
fn dim_at_a_point() {
    let f = Files::new();
    let a = f.add("a.json", ZMOD4_X);
    let (code, out, _) = invoke(&["dim", &a, "--at", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "dim at 2: 1");
    let (code, v) = json_result(&["dim", &a, "--at", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verb"], "dim");
    assert_eq!(v["result"], 1);
    assert_eq!(v["inputs"]["point"], 2);
}

#[test]
fn dim_without_point() {
    let f = Files::new();
    let (code, v) = json_result(&["dim", &f.add("a.json", ZMOD4_X)]);
    assert_eq!((code, v["result"].clone()), (0, Value::from(1)));
    let (code, _, err) = invoke(&["dim", &f.add("z.json", Z_X)]);
    assert_eq!(code, 3);
    assert!(err.contains("effective dimension"), "{err}");
}

#[test]
fn boolean_tensor_check() {
    let f = Files::new();
    let a = f.add("bool.json", r#"{"boolean_atoms": 2}"#);
    let b = f.add("b.json", Z_XY);
    let (code, v) = json_result(&["tensor", &a, &b, "--check"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["path"], "boolean");
    assert_eq!(v["result"]["agreement"], true);
    assert_eq!(v["result"]["formula_dim"], 2);
}

#[test]
fn tensor_paths() {
    let f = Files::new();
    let a = f.add("a.json", r#"{"base": {"kind": "Zmod", "n": 12}, "vars": ["x"], "relations": []}"#);
    let b = f.add("b.json", r#"{"base": {"kind": "Zmod", "n": 18}, "vars": ["y"], "relations": ["y^2"]}"#);
    let (code, v) = json_result(&["tensor", &a, &b, "--check"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["path"], "nonzero_characteristic");
    assert_eq!(v["result"]["formula_dim"], 1);
    let points: Vec<i64> = v["result"]["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["point"].as_i64().unwrap())
        .collect();
    assert_eq!(points, [2, 3]);

    let (code, v) = json_result(&["tensor", &b, &a]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["path"], "zero_dimensional_factor");

    let (code, _, err) = invoke(&["tensor", &f.add("z1.json", Z_X), &f.add("z2.json", Z_XY)]);
    assert_eq!(code, 3);
    assert!(err.contains("nonzero characteristic"), "{err}");
}

#[test]
fn effspec_round_trip() {
    let f = Files::new();
    for doc in [
        Z_X,
        ZMOD4_X,
        r#"{"base": {"kind": "Z"}, "vars": ["x"], "relations": ["2*x - 1"]}"#,
        r#"{"base": {"kind": "Z"}, "vars": [], "relations": ["1"]}"#,
        r#"{"boolean_atoms": 3}"#,
    ] {
        let (code, v) = json_result(&["effspec", &f.add("a.json", doc)]);
        assert_eq!(code, 0);
        let text = serde_json::to_string(&v["result"]).unwrap();
        let parsed = EffectiveSpectrum::from_json(&text).unwrap();
        assert_eq!(serde_json::to_value(&parsed).unwrap(), v["result"]);
    }
    let (_, v) = json_result(&["effspec", &f.add("b.json", r#"{"base": {"kind": "Z"}, "vars": ["x"], "relations": ["2*x - 1"]}"#)]);
    assert_eq!(v["result"]["closed_points"], serde_json::json!([2]));
    assert_eq!(v["result"]["cofinite"], true);
}

#[test]
fn fibre_and_bounds() {
    let f = Files::new();
    let a = f.add("a.json", r#"{"base": {"kind": "Z"}, "vars": ["x", "y"], "relations": ["2", "x*y"]}"#);
    let (code, v) = json_result(&["fibre", &a, "--at", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["effective"], false);
    assert_eq!(v["result"]["dim"], "empty");
    let (_, v) = json_result(&["fibre", &a, "--at", "2"]);
    assert_eq!(v["result"]["factors"][0]["relations"], serde_json::json!(["x*y"]));
    let (code, _, _) = invoke(&["fibre", &a]);
    assert_eq!(code, 2);

    let (code, v) = json_result(&["bounds", &f.add("z.json", Z_X)]);
    assert_eq!(code, 0);
    assert_eq!((v["result"]["lower"].clone(), v["result"]["upper"].clone()), (1.into(), 3.into()));
    assert_eq!(v["result"]["dim_if_known"], Value::Null);
}

#[test]
fn altitude_formula_witnesses() {
    let f = Files::new();
    let a = f.add("a.json", Z_XY);
    let w = f.add("w.json", r#"{"fibre": 3, "prime": ["x"], "components": [[]]}"#);
    let (code, v) = json_result(&["af", &a, "--witness", &w]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["holds"], true);
    assert_eq!(v["result"]["height"], 1);

    let a = f.add("b.json", r#"{"base": {"kind": "Fp", "n": 2}, "vars": ["x", "y"], "relations": ["x*y"]}"#);
    let bad = f.add("bad.json", r#"{"fibre": 2, "prime": ["x - 1", "y - 1"], "components": [["x"], ["y"]]}"#);
    let (code, _, err) = invoke(&["af", &a, "--witness", &bad]);
    assert_eq!(code, 4);
    assert!(err.contains("inconsistent witness"), "{err}");
}

#[test]
fn golden_exit_codes() {
    let f = Files::new();
    let good = f.add("good.json", ZMOD4_X);
    let cases: Vec<(Vec<String>, i32)> = vec![
        (vec!["dim".into(), f.add("syntax.json", "{\"base\": ")], 2),
        (vec!["dim".into(), f.add("expr.json", r#"{"base": {"kind": "Z"}, "vars": ["x"], "relations": ["x^-1"]}"#)], 2),
        (vec!["dim".into(), f.add("badp.json", r#"{"base": {"kind": "Fp", "n": 9}, "vars": [], "relations": []}"#)], 2),
        (vec!["dim".into(), f.add("unknown.json", r#"{"base": {"kind": "Z"}, "vars": ["x"], "relations": ["y"]}"#)], 2),
        (vec!["dim".into(), "/nonexistent/file.json".into()], 2),
        (vec!["dim".into(), good.clone(), "--at".into(), "4".into()], 2),
        (vec!["dim".into(), good.clone(), "--at".into(), "3".into()], 2),
        (vec!["dim".into(), good.clone(), "--generic".into()], 2),
        (vec!["dim".into(), good.clone(), "--at".into(), "2".into(), "--generic".into()], 2),
        (vec!["tensor".into(), good.clone()], 2),
        (vec!["check".into(), good.clone()], 2),
        (vec!["frobnicate".into()], 2),
        (vec!["--order".into(), "revlex".into(), "dim".into(), good.clone()], 2),
        (vec!["dim".into(), f.add("z.json", Z_X)], 3),
        (vec!["tensor".into(), f.add("z1.json", Z_X), f.add("z2.json", Z_X)], 3),
        (vec!["tensor".into(), good.clone(), f.add("q.json", r#"{"base": {"kind": "Q"}, "vars": [], "relations": []}"#)], 2),
        (vec!["dim".into(), good.clone()], 0),
    ];
    for (args, want) in cases {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, _, err) = invoke(&refs);
        assert_eq!(code, want, "{args:?}: {err}");
        if want != 0 {
            assert!(!err.is_empty(), "{args:?}: no diagnostic");
        }
    }
}

#[test]
fn json_errors_are_single_objects() {
    let f = Files::new();
    let (code, out, err) = invoke(&["--json", "dim", &f.add("z.json", Z_X)]);
    assert_eq!(code, 3);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["code"], 3);
    assert!(err.starts_with("error:"));
}

#[test]
fn output_is_deterministic() {
    let f = Files::new();
    let a = f.add("a.json", r#"{"base": {"kind": "Zmod", "n": 30}, "vars": ["x", "y"], "relations": ["x*y - 1"]}"#);
    let b = f.add("b.json", r#"{"base": {"kind": "Zmod", "n": 12}, "vars": ["x"], "relations": ["x^2"]}"#);
    for args in [
        vec!["--json", "tensor", a.as_str(), b.as_str()],
        vec!["--json", "check", "--seed", "7", "--count", "6"],
        vec!["--json", "effspec", a.as_str()],
    ] {
        let first = invoke(&args);
        let second = invoke(&args);
        assert_eq!(first, second);
    }
    let (code, v) = json_result(&["check", "--seed", "7", "--count", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["seed"], 7);
    assert_eq!(v["inputs"]["seed"], 7);
    assert_eq!(v["result"]["failures"], 0);
}

#[test]
fn lex_order_gives_the_same_answers() {
    let f = Files::new();
    let a = f.add("a.json", r#"{"base": {"kind": "Z"}, "vars": ["x", "y", "z"], "relations": ["6", "x*y - z^2", "x + y"]}"#);
    for pt in ["2", "3"] {
        let (_, grevlex) = json_result(&["dim", &a, "--at", pt]);
        let (_, lex) = json_result(&["--order", "lex", "dim", &a, "--at", pt]);
        assert_eq!(grevlex["result"], lex["result"]);
    }
}

#[test]
fn binary_honours_no_color() {
    let f = Files::new();
    let a = f.add("bool.json", r#"{"boolean_atoms": 1}"#);
    let b = f.add("b.json", Z_XY);
    let out = Command::new(env!("CARGO_BIN_EXE_tensordim"))
        .args(["tensor", &a, &b])
        .env("NO_COLOR", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\x1b'));
    assert!(text.contains("dim(A ⊗ B) = 2"));
}
