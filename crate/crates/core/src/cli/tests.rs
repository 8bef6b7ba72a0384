use super::*;

fn inv(args: &[&str], input: &str) -> (i32, String, String) {
    let mut argv = vec!["inv"];
    argv.extend_from_slice(args);
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn gen_q() {
    assert_eq!(inv(&["gen", "Q:1", "--n", "2"], ""), (0, "x1_1*y1_1\n".into(), String::new()));
}

#[test]
fn usage_errors() {
    assert_eq!(inv(&["gen", "Q:1"], "").0, EXIT_USAGE);
    assert_eq!(inv(&["gen", "NOPE:1", "--n", "2"], "").0, EXIT_USAGE);
    assert_eq!(inv(&["space", "1,x", "--n", "2"], "").0, EXIT_USAGE);
    let (code, _, err) = inv(&["check", "Q:1", "--n", "2", "--mode", "bogus"], "");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--mode"));
    assert_eq!(inv(&["frobnicate"], "").0, EXIT_USAGE);
}

#[test]
fn check_from_stdin() {
    assert_eq!(inv(&["check", "--n", "2"], "x1_1*y1_2 + y1_1*x1_2").0, EXIT_OK);
    let (code, out, _) = inv(&["check", "--n", "2", "--mode", "symbolic"], "x1_1*y1_1 + x1_1*x1_2");
    assert_eq!(code, EXIT_FAIL);
    assert!(out.starts_with("fail\n"));
}

#[test]
fn relations_text() {
    assert_eq!(inv(&["relations", "--n", "3"], "").1, "G-relation: 0 (verified over Int and GF(2))\n");
    assert_eq!(inv(&["relations", "--n", "2"], "").1, "Gamma-relation: 0 (verified over Int and GF(2))\n");
}

#[test]
fn space_and_decompose() {
    let (code, out, _) = inv(&["space", "1,1,1,1", "--group", "O2"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("dimension: 3\n"));
    assert!(inv(&["decompose", "BIJ:1,2|3,4"], "").1.starts_with("indecomposable"));
}

#[test]
fn rewrite_and_jacobian() {
    let (code, out, _) = inv(&["rewrite", "TR:1,2"], "");
    assert_eq!((code, out.as_str()), (0, "B1_2\n"));
    assert_eq!(inv(&["rewrite", "--n", "3"], "z_1").0, EXIT_FAIL);
    assert_eq!(inv(&["jacobian", "--n", "4", "--m", "2"], "").1.lines().next(), Some("rank 3 of 3 coordinates"));
}

#[test]
fn tuple_commands() {
    let g = r#"{"m":2,"beta":[[0,1],[1,0]],"q":[1,1],"field":{"k":1}}"#;
    let (code, out, _) = inv(&["realize", "--n", "2", "--json"], g);
    assert_eq!(code, 0);
    assert!(out.contains("\"extended\": true"));
    let t = r#"{"n":2,"m":1,"field":{"k":2},"columns":[[1,0]]}"#;
    assert_eq!(inv(&["nullcone"], t), (0, "in null-cone\n".into(), String::new()));
    assert_eq!(inv(&["orbit", "--group", "SO"], &format!("[{t}, {t}]")).0, EXIT_FAIL);
    let u = r#"{"n":2,"m":1,"field":{"k":2},"columns":[[1,1]]}"#;
    assert_eq!(inv(&["orbit", "--group", "SO"], &format!("[{u}, {u}]")).1, "same\n");
    assert_eq!(inv(&["nullcone", "DELTA:nu=2", "--trials", "5"], "").0, EXIT_OK);
}

#[test]
fn deterministic_output() {
    let args = ["check", "DELTA:nu=3", "--mode", "randomized", "--seed", "7", "--json"];
    assert_eq!(inv(&args, ""), inv(&args, ""));
}
