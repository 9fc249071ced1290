use pnil_cli::io::{module_from_str, module_to_string, IoError};
use pnil_cli::suites::{run_suite, Params, SuiteError};
use pnil_core::constructions::catalog;
use pnil_core::module::SchemaError;
use pnil_core::{Module, F3};
use proptest::prelude::*;
use std::process::Command;

fn pnil(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pnil")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn json_round_trip(ix in 0usize..64, a in 0i64..3, b in 0i64..3, c in 0i64..3, d in 0i64..3) {
        let cat = catalog::<F3>();
        let m = &cat[ix % cat.len()].module;
        let g = pnil_core::Matrix::<F3>::from_ints(&[vec![a, b], vec![c, d]]);
        let m = m.twist(&g).unwrap_or_else(|_| m.clone());
        let s = module_to_string(&m);
        let back: Module<F3> = module_from_str(&s).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(module_to_string(&back), s);
    }
}

#[test]
fn schema_errors_name_the_field() {
    let e = module_from_str::<F3>(r#"{"p":3,"dim":2,"x":[[0,0]],"y":[[0,0],[0,0]]}"#).unwrap_err();
    assert!(matches!(e, IoError::Schema(SchemaError::Field { ref field, .. }) if field == "x"), "{e}");
    let e = module_from_str::<F3>(r#"{"p":3,"dim":1,"x":[[0]],"y":[[0]],"bogus":1}"#).unwrap_err();
    assert!(matches!(e, IoError::Json(_)));
}

#[test]
fn suite_parameter_errors() {
    assert!(matches!(run_suite("nope", &Params::default()), Err(SuiteError::Unknown(_))));
    let bad = Params { p: 4, ..Params::default() };
    assert!(matches!(run_suite("heller", &bad), Err(SuiteError::Malformed(_))));
    let bad = Params { ext_degree: 0, ..Params::default() };
    assert!(matches!(run_suite("heller", &bad), Err(SuiteError::Malformed(_))));
}

#[test]
fn reports_are_sorted_and_reproducible() {
    let a = run_suite("kronecker", &Params::default()).unwrap();
    let b = run_suite("kronecker", &Params::default()).unwrap();
    let ids: Vec<_> = a.records.iter().map(|r| r.claim_id.clone()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let strip = |r: &pnil_cli::SuiteReport| r.records.iter().map(|x| (x.claim_id.clone(), x.computed.clone())).collect::<Vec<_>>();
    assert_eq!(strip(&a), strip(&b));
    assert!(!a.has_fail());
}

#[test]
fn exit_codes() {
    let (code, _, err) = pnil(&["suite", "nope"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = pnil(&["--bogus"]);
    assert_eq!(code, 2);
    let (code, out, _) = pnil(&["suite", "kronecker", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["records"][0]["anchor"].as_str().unwrap().starts_with("criterion 6"));
}

#[test]
fn strict_turns_inconclusive_into_exit_3() {
    let (code, out, _) = pnil(&["suite", "ar-components"]);
    let inconclusive = out.contains("inconclusive-window  ");
    assert_eq!(code, 0);
    let (code, _, _) = pnil(&["--strict", "suite", "ar-components"]);
    assert_eq!(code, if inconclusive { 3 } else { 0 });
}

#[test]
fn make_and_analyse_round_trip() {
    let dir = std::env::temp_dir().join(format!("pnil-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("w33.json");
    let fs = f.to_str().unwrap();
    let (code, _, err) = pnil(&["make", "w", "--n", "3", "--d", "3", "--out", fs]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = pnil(&["jordan", fs]);
    assert_eq!(code, 0);
    assert!(out.contains("generic Jordan type [1]⊕[2]⊕[3]"), "{out}");
    assert!(out.contains("EIP true (class 3)"));
    let (code, out, _) = pnil(&["syzygy", fs, "--shift", "2"]);
    assert_eq!(code, 0);
    let t: Module<F3> = module_from_str(&out).unwrap();
    assert_eq!(t.dim(), 15);
    let (code, out, _) = pnil(&["slice", fs, "--width", "1", "--height", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph") && out.contains("style=dashed"));
    let (code, out, _) = pnil(&["resolution", fs, "--len", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degrees"][1][0], 1);
    assert_eq!(v["degrees"][2][0], 3);
    let (code, _, err) = pnil(&["--p", "5", "jordan", fs]);
    assert_eq!(code, 2);
    assert!(err.contains("does not match"));
    let (code, out, _) = pnil(&["--p", "5", "make", "sl2", "--kind", "verma", "--lambda", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"p\": 5"));
    let (code, _, _) = pnil(&["make", "w", "--n", "1", "--d", "3"]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
