use std::process::Command;

use orthoinv::cli::run;
use serde_json::Value;

fn inv(args: &[&str], input: &str) -> (i32, String) {
    let mut argv = vec!["inv"];
    argv.extend_from_slice(args);
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = format!("{}/schemas/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&v).unwrap()
}

fn assert_valid(name: &str, args: &[&str], input: &str, code: i32) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let (got, out) = inv(&full, input);
    assert_eq!(got, code, "{args:?}: {out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    let s = schema(name);
    if let Err(errors) = s.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("{name}: {msgs:?}\n{out}");
    }
    v
}

const TUPLE: &str = r#"{"n":4,"m":2,"field":{"k":8},"columns":[[1,2,3,4],[5,6,7,8]]}"#;

#[test]
fn every_subcommand_matches_its_schema() {
    assert_valid("gen", &["gen", "F:1,2|3,4"], "", 0);
    assert_valid("check", &["check", "G:1,2|3,4"], "", 0);
    assert_valid("check", &["check", "DELTA:nu=2", "--group", "O4"], "", 1);
    assert_valid("check", &["check", "DELTA:nu=3", "--mode", "randomized"], "", 0);
    assert_valid("check", &["check", "--n", "4", "--group", "O4"], "x1_1*y1_2", 1);
    assert_valid("space", &["space", "1,1,1,1", "--group", "O2"], "", 0);
    assert_valid("decompose", &["decompose", "BIJ:1,2|1,3"], "", 0);
    assert_valid("decompose", &["decompose", "BIJ:1,2|3,4"], "", 0);
    assert_valid("relations", &["relations", "--n", "5"], "", 0);
    assert_valid("relations", &["relations", "--n", "4"], "", 0);
    assert_valid("rewrite", &["rewrite", "--n", "3"], "x1_1*y1_1 + z_1^2", 0);
    assert_valid("rewrite", &["rewrite", "B:1,2", "--n", "2", "--target", "b"], "", 0);
    let g = r#"{"m":2,"beta":[[0,3],[3,0]],"q":[1,7],"field":{"k":8}}"#;
    assert_valid("realize", &["realize", "--n", "4"], g, 0);
    assert_valid("orbit", &["orbit", "--group", "SO"], &format!("[{TUPLE},{TUPLE}]"), 0);
    assert_valid("nullcone", &["nullcone"], TUPLE, 1);
    assert_valid("nullcone", &["nullcone", "TR:1,2,3", "--trials", "10"], "", 0);
    assert_valid("jacobian", &["jacobian", "--n", "5", "--m", "5"], "", 0);
}

#[test]
fn realized_tuple_round_trips_through_schemas() {
    let g = r#"{"m":3,"beta":[[0,1,0],[1,0,2],[0,2,0]],"q":[0,4,9],"field":{"k":4}}"#;
    let v: Value = serde_json::from_str(g).unwrap();
    assert!(schema("gram_data").is_valid(&v));
    let out = assert_valid("realize", &["realize", "--n", "3"], g, 0);
    assert!(schema("vector_tuple").is_valid(&out["tuple"]));
}

#[test]
fn json_output_is_deterministic() {
    let args = ["space", "2,2", "--group", "SO6", "--mode", "randomized", "--seed", "3", "--json"];
    assert_eq!(inv(&args, ""), inv(&args, ""));
}

#[test]
fn binary_examples() {
    let bin = env!("CARGO_BIN_EXE_inv");
    let out = Command::new(bin).args(["gen", "Q:1", "--n", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "x1_1*y1_1\n");
    let out = Command::new(bin).args(["relations", "--n", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "G-relation: 0 (verified over Int and GF(2))\n");
    let out = Command::new(bin).args(["gen", "--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--bogus"));
}
