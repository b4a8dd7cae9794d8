use serde_json::Value;

use seifert::cli::run;

fn seifert(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["seifert"];
    full.extend_from_slice(args);
    let out = run(full, None);
    let json = serde_json::from_str(out.stdout.trim()).unwrap_or(Value::Null);
    (out.code, json)
}

const M1: &str = "SFS[-1; o 0; (5,1)(5,1)(5,3)]";
const M2: &str = "SFS[-1; o 0; (5,1)(5,2)(5,2)]";

#[test]
fn decide_hempel_pair() {
    let (code, v) = seifert(&["decide", M1, M2]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "hempel");
    assert_eq!(v["k"], 2);
    let raw = run(["seifert", "decide", M1, M2], None).stdout;
    assert!(raw.starts_with(r#"{"kind":"hempel","k":2,"#), "{raw}");
}

#[test]
fn invariants_of_torus_bundle() {
    let (code, v) = seifert(&["invariants", "SFS[-2; o 1;]"]);
    assert_eq!(code, 0);
    assert_eq!(v["euler_number"], serde_json::json!({"num": 2, "den": 1}));
    assert_eq!(v["geometry"], "Nil");
    assert_eq!(v["h1"], serde_json::json!({"rank": 2, "torsion": [2]}));
    assert_eq!(v["chi_orb"], serde_json::json!({"num": 0, "den": 1}));
}

#[test]
fn bounded_invariants_have_no_euler_number() {
    let (code, v) = seifert(&["invariants", "SFS[0; o 0; bd 1; (2,1)(3,1)]"]);
    assert_eq!(code, 0);
    assert_eq!(v["euler_number"], Value::Null);
    assert_eq!(v["geometry"], "HyperbolicBase");
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let out = run(["seifert", "decide", "SFS[bad"], None);
    assert_eq!(out.code, 2);
    let out = run(["seifert", "decide", "SFS[bad", M1], None);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("byte 4"), "{}", out.stderr);
    let out = run(["seifert", "invariants", "SFS[0; o 0; (4,2)]"], None);
    assert_eq!(out.code, 2);
    assert_eq!(run(["seifert", "frobnicate"], None).code, 2);
}

#[test]
fn domain_errors_exit_one_with_json() {
    let (code, v) = seifert(&["decide", "SFS[0; o 1;]", "SFS[0; o 0; bd 1;]"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "mixed_boundary");
    let (code, v) = seifert(&["partners", "SFS[0; o 0; bd 1; (2,1)]"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "bounded_symbol");
    let (code, v) = seifert(&["orbifold-decide", "ORB[o 0; bd 1; 2]", "ORB[o 0; 2]"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "orbifold_boundary");
}

#[test]
fn decide_bounded_pair() {
    let (code, v) = seifert(&["decide", "SFS[0; o 0; bd 1; (2,1)(3,1)]", "SFS[0; o 0; bd 1; (2,1)(3,2)]"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "equivalent");
    assert_eq!(v["k"], 5);
}

#[test]
fn verify_reports_agreement() {
    let (code, v) = seifert(&["decide", "--verify", M1, M2]);
    assert_eq!(code, 0);
    assert_eq!(v["verify"]["fingerprints_equal"], true);
    assert_eq!(v["verify"]["consistent"], true);
    let (_, v) = seifert(&["decide", "--verify", "SFS[-2; o 1;]", "SFS[-3; o 1;]"]);
    assert_eq!(v["separator"], "h1");
    assert_eq!(v["verify"]["fingerprints_equal"], false);
    assert_eq!(v["verify"]["consistent"], true);
}

#[test]
fn partners_and_normalize() {
    let (_, v) = seifert(&["partners", M1]);
    assert_eq!(v["partners"].as_array().unwrap().len(), 2);
    let (_, v) = seifert(&["normalize", "SFS[0; o 0; (3,4)]"]);
    assert_eq!(v["normalized"], "SFS[1; o 0; (3,1)]");
}

#[test]
fn rotation_flag_converts_pairs() {
    // rotation (5,2) has β = 3 since 3·2 ≡ 1 mod 5
    let (code, v) = seifert(&["--rotation", "normalize", "SFS[0; o 0; (5,2)]"]);
    assert_eq!(code, 0);
    assert_eq!(v["normalized"], "SFS[0; o 0; (5,3)]");
    let (_, v) = seifert(&["normalize", "SFS[0; o 0; (5,2)]"]);
    assert_eq!(v["normalized"], "SFS[0; o 0; (5,2)]");
}

#[test]
fn compare_and_fingerprint_are_deterministic() {
    let args = ["seifert", "fingerprint", "--max-index", "4", M1];
    let a = run(args, None);
    let b = run(args, None);
    assert_eq!(a, b);
    let (code, v) = seifert(&["compare", M1, M2]);
    assert_eq!(code, 0);
    assert_eq!(v["equal"], true);
    let (_, v) = seifert(&["compare", "--max-index", "1", "SFS[-2; o 1;]", "SFS[-3; o 1;]"]);
    assert_eq!(v["equal"], false);
    assert!(v["differences"].as_array().unwrap().iter().any(|d| d.as_str().unwrap().starts_with("index-1")));
}

#[test]
fn orbifold_decide() {
    let (code, v) = seifert(&["orbifold-decide", "ORB[o 0; 2,4,4]", "ORB[n 1; 2,2]"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "not_equivalent");
    assert_eq!(v["separator"], "base_orbifold");
}

#[test]
fn catalogue_override_and_files() {
    let dir = std::env::temp_dir().join(format!("seifert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cat = dir.join("cat.txt");
    std::fs::write(&cat, "# tiny\nC2; 2; (1 2)\nS3; 3; (1 2), (1 2 3)\n").unwrap();
    let symbol = dir.join("m.sfs");
    std::fs::write(&symbol, "SFS[-2; o 1;]\n").unwrap();
    let out = run(["seifert", "fingerprint", "--max-index", "1", symbol.to_str().unwrap()], Some(cat.display().to_string()));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(out.stdout.trim()).unwrap();
    let names: Vec<&String> = v["hom_counts"].as_object().unwrap().keys().collect();
    assert_eq!(names, vec!["C2", "S3"]);
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "X; 3; (1 4)\n").unwrap();
    let (code, v) = {
        let out = run(["seifert", "fingerprint", "--catalogue", bad.to_str().unwrap(), "SFS[0; o 1;]"], None);
        (out.code, serde_json::from_str::<Value>(out.stdout.trim()).unwrap())
    };
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "catalogue");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn pretty_output_is_text() {
    let out = run(["seifert", "--pretty", "invariants", "SFS[-2; o 1;]"], None);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("geometry: Nil"));
    assert!(out.stdout.contains("H1: Z^2 + Z/2"));
}
