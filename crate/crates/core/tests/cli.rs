use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.display().to_string()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn pnrd(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_pnrd")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Same call through the library entry point.
fn run_lib(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("pnrd").chain(args.iter().copied());
    let code = pnrd_core::cli::run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--output", "json"]);
    let r = run_lib(&full);
    assert_eq!(r.code, 0, "{}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap()
}

#[test]
fn regcont_json_on_the_degenerate_class() {
    let exe = data("exe.json");
    let r = pnrd(&["regcont", "--input", &exe, "--class", "L", "--output", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("{\"m\":1,\"g\":2,"), "{}", r.stdout);
}

#[test]
fn index_table_row() {
    let exe = data("exe.json");
    let r = pnrd(&["index", "--input", &exe, "--class", "L"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("i=0 dimK=1 neg=1 chi=0"), "{}", r.stdout);
}

#[test]
fn chi_of_a_rank_two_bundle() {
    let exe = data("exe.json");
    let r = pnrd(&["chi", "--input", &exe, "--class", "ample2", "--rank", "2", "--output", "json"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("\"chi_bundle\":\"2\""), "{}", r.stdout);
    assert!(r.stdout.contains("\"ord_k\":\"4\""));
}

#[test]
fn hilbert_classify_and_vanishing() {
    let exe = data("exe.json");
    let h = json(&["hilbert", "--input", &exe, "--class", "L"]);
    assert_eq!(h["q"], "N^2 + N");
    assert_eq!(h["q_coeffs"], serde_json::json!(["0", "1", "1"]));
    let c = json(&["classify", "--input", &exe, "--class", "L"]);
    assert_eq!(c["label"], "WIT(1)-generic");
    assert_eq!(c["j"], 1);
    assert_eq!(c["all_vanishing_possible"], true);
    let c = json(&["classify", "--input", &exe, "--class", "minus"]);
    assert_eq!((c["label"].as_str(), c["chi"].as_str()), (Some("IT(2)"), Some("1")));
    let v = json(&["vanishing", "--input", &exe, "--class", "L"]);
    assert_eq!(v["vanish_low"], serde_json::json!([]));
    assert_eq!(v["vanish_high"], serde_json::json!([2]));
}

#[test]
fn rank_routes_through_bundle_operations() {
    let exe = data("exe.json");
    let r1 = json(&["regcont", "--input", &exe, "--class", "ample2", "--rank", "2"]);
    let id = json(&["regcont", "--input", &exe, "--class", "polarization"]);
    assert_eq!(r1["m"], id["m"]);
    assert_eq!(r1["predicate_table"], id["predicate_table"]);
    let c = json(&["classify", "--input", &exe, "--class", "ample2", "--rank", "2"]);
    assert_eq!(c["chi"], "2");
}

#[test]
fn sweep_reports_points_and_segments() {
    let exe = data("exe.json");
    let s = json(&[
        "sweep", "--input", &exe, "--class", "L", "--direction", "polarization", "--grid", "-1,0,1/2,1",
    ]);
    let ms: Vec<i64> = s["points"].as_array().unwrap().iter().map(|p| p["m"].as_i64().unwrap()).collect();
    assert_eq!(ms, vec![2, 1, 1, 0]);
    let segs = s["segments"].as_array().unwrap();
    assert_eq!(segs.len(), 3);
    assert_eq!((segs[1]["from"].as_str(), segs[1]["to"].as_str()), (Some("0"), Some("1/2")));
}

#[test]
fn json_round_trips_byte_for_byte() {
    let exe = data("exe.json");
    let mixed = data("mixed.json");
    let cases: Vec<Vec<&str>> = vec![
        vec!["validate", "--input", &mixed],
        vec!["hilbert", "--input", &mixed, "--class", "alpha"],
        vec!["regcont", "--input", &mixed, "--class", "alpha"],
        vec!["sweep", "--input", &exe, "--class", "L", "--direction", "mixed", "--grid", "-1,1/3"],
        vec!["oracle-check", "--input", &exe],
    ];
    for mut args in cases {
        args.extend(["--output", "json"]);
        let r = run_lib(&args);
        assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(format!("{}\n", serde_json::to_string(&v).unwrap()), r.stdout);
        assert!(!has_float(&v));
    }
}

fn has_float(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_f64(),
        Value::Array(a) => a.iter().any(has_float),
        Value::Object(o) => o.values().any(has_float),
        _ => false,
    }
}

#[test]
fn json_and_table_agree() {
    let mixed = data("mixed.json");
    for cmd in ["chi", "index", "classify", "vanishing", "hilbert"] {
        let v = json(&[cmd, "--input", &mixed, "--class", "alpha"]);
        assert!(!has_float(&v));
        let table = run_lib(&[cmd, "--input", &mixed, "--class", "alpha"]).stdout;
        let first = table.lines().next().unwrap();
        for (k, val) in v.as_object().unwrap() {
            let shown = match val {
                Value::String(s) if s.contains(' ') => serde_json::to_string(s).unwrap(),
                Value::String(s) => s.clone(),
                Value::Null => "-".into(),
                Value::Array(a) if a.is_empty() => "-".into(),
                Value::Array(a) => a
                    .iter()
                    .map(|x| x.as_str().map_or_else(|| x.to_string(), str::to_string))
                    .collect::<Vec<_>>()
                    .join(","),
                other => other.to_string(),
            };
            assert!(first.contains(&format!("{k}={shown}")), "{cmd}: {k}={shown} not in {first}");
        }
    }
}

#[test]
fn validate_is_idempotent() {
    let mixed = data("mixed.json");
    let before = std::fs::read(&mixed).unwrap();
    let a = run_lib(&["validate", "--input", &mixed]);
    let b = run_lib(&["validate", "--input", &mixed]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(&mixed).unwrap(), before);
}

#[test]
fn class_file_forms() {
    let exe = data("exe.json");
    let single = data("single_class.json");
    let map = data("class_map.json");
    let v = json(&["index", "--input", &exe, "--class-file", &single]);
    assert_eq!((v["i"].as_u64(), v["chi"].as_str()), (Some(1), Some("-1/2")));
    let v = json(&["index", "--input", &exe, "--class-file", &map, "--class", "D"]);
    assert_eq!((v["dimK"].as_u64(), v["chi"].as_str()), (Some(1), Some("0")));
    // the class file overrides a document class of the same name
    let v = json(&["chi", "--input", &exe, "--class-file", &map, "--class", "L"]);
    assert_eq!(v["chi"], "9");
    // a direction may come from the document while the class comes from the file
    let v = json(&["sweep", "--input", &exe, "--class-file", &map, "--class", "D", "--direction", "polarization", "--grid", "0"]);
    assert_eq!(v["points"][0]["m"], 1);
}

#[test]
fn exit_codes() {
    let exe = data("exe.json");
    assert_eq!(pnrd(&["frobnicate"]).code, 64);
    assert_eq!(pnrd(&["chi", "--input", &exe, "--bogus"]).code, 64);
    assert_eq!(pnrd(&["chi", "--input", &exe, "--rank", "0", "--class", "L"]).code, 64);
    assert_eq!(pnrd(&["chi", "--input", &exe]).code, 64);
    assert_eq!(pnrd(&["chi", "--input", &exe, "--class", "nope"]).code, 64);
    assert_eq!(pnrd(&["hilbert", "--input", &exe, "--class", "L", "--rank", "2"]).code, 64);
    assert_eq!(pnrd(&["sweep", "--input", &exe, "--class", "L", "--direction", "L", "--grid", "1,x"]).code, 64);
    assert_eq!(pnrd(&["--help"]).code, 0);
    assert_eq!(pnrd(&["--version"]).code, 0);

    let missing = pnrd(&["chi", "--input", "/nonexistent/doc.json", "--class", "L"]);
    assert_eq!(missing.code, 2);
    assert!(missing.stderr.contains("/nonexistent/doc.json"));
}

fn write_temp(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("pnrd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.display().to_string()
}

#[test]
fn validation_failures_name_the_offending_path() {
    let text = std::fs::read_to_string(data("exe.json")).unwrap();

    let bad_rational = write_temp("bad_rational.json", &text.replace("\"sqrt_deg_phi\": \"1\"", "\"sqrt_deg_phi\": \"1/0\""));
    let r = pnrd(&["validate", "--input", &bad_rational]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("$.variety.sqrt_deg_phi"), "{}", r.stderr);

    let float = write_temp("float.json", &text.replace("[\"0\", \"0\"], [\"0\", \"1\"]", "[\"0\", \"0\"], [\"0\", 1.5]"));
    let r = pnrd(&["validate", "--input", &float]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("$.classes.L.E[1][1]"), "{}", r.stderr);

    let asym = write_temp("asym.json", &text.replace("[\"0\", \"0\"], [\"0\", \"1\"]", "[\"0\", \"1\"], [\"0\", \"1\"]"));
    let r = pnrd(&["chi", "--input", &asym, "--class", "L"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("$.classes.L"), "{}", r.stderr);

    let garbled = write_temp("garbled.json", "{ \"variety\": ");
    assert_eq!(pnrd(&["validate", "--input", &garbled]).code, 2);

    let indefinite = write_temp(
        "indefinite.json",
        &text.replace("\"involution\": { \"base\": \"identity\" }", "\"involution\": { \"base\": \"identity\", \"H\": [[\"1\", \"0\"], [\"0\", \"-1\"]] }"),
    );
    let r = pnrd(&["validate", "--input", &indefinite]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("$.variety.factors[0]"), "{}", r.stderr);
}

#[test]
fn non_square_data_is_a_computation_error() {
    // type I over Q(√2) with g = 1 validates but has no square root
    let doc = r#"{
        "variety": {"factors": [{
            "name": "A", "g": 1, "r": 1,
            "algebra": {"kind": "field", "center_min_poly": ["-2", "0", "1"]},
            "albert_type": "I",
            "involution": {"base": "identity"}
        }]},
        "classes": {"x": {"A": [[["1", "1"]]]}}
    }"#;
    let p = write_temp("nonsquare.json", doc);
    assert_eq!(pnrd(&["validate", "--input", &p]).code, 0);
    let r = pnrd(&["chi", "--input", &p, "--class", "x"]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("perfect square"), "{}", r.stderr);
}

#[test]
fn oracle_check_requires_the_split_model() {
    let r = pnrd(&["oracle-check", "--input", &data("mixed.json")]);
    assert_eq!(r.code, 2);
    let v = json(&["oracle-check", "--input", &data("exe.json")]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 5);
}
