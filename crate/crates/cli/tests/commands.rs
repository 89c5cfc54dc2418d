use hyperspace_cli::{run, EXIT_ARITH, EXIT_AUDIT_FAILURES, EXIT_OK, EXIT_PARSE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hyperspace").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn eval_examples() {
    assert_eq!(call(&["eval", "c[1,1] * c[1,1]"]), (EXIT_OK, "c[0,2]\n".into(), String::new()));
    assert_eq!(call(&["eval", "abs(c[3,4])"]).1, "5\n");
    assert_eq!(call(&["eval", "lift(c[3,4], 12)"]).1, "c[3,4,12]\n");
}

#[test]
fn json_output() {
    let (code, out, _) = call(&["--format", "json", "eval", "lift(c[3,4], 12)"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kind"], "cartesian");
    assert_eq!(v["coeffs"], serde_json::json!([3.0, 4.0, 12.0]));
    let (_, out, _) = call(&["--format", "json", "eval", "abs(c[3,4])"]);
    assert_eq!(out.trim(), r#"{"kind":"scalar","value":5.0}"#);
    let (_, out, _) = call(&["--format", "json", "roots", "c[-1,0]", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["roots"].as_array().unwrap().len(), 2);
}

#[test]
fn json_numbers_decode_with_the_core_schema() {
    let (_, out, _) = call(&["--format", "json", "convert", "--to", "polar", "c[1,1,1]"]);
    let n: hyperspace::json::Number = serde_json::from_str(&out).unwrap();
    assert!(matches!(n, hyperspace::json::Number::Polar(_)));
    let (_, out, _) = call(&["--format", "json", "eval", "s3[1,2,3] * s3[0,1,0]"]);
    let n: hyperspace::json::Number = serde_json::from_str(&out).unwrap();
    assert!(matches!(n, hyperspace::json::Number::Space3(_)));
}

#[test]
fn convert_and_roots() {
    assert_eq!(call(&["convert", "--to", "polar", "c[0,2]"]).1, "p[2;1.57079632679]\n");
    assert_eq!(call(&["convert", "--to", "cartesian", "p[2; pi/2]"]).1, "c[0,2]\n");
    assert_eq!(call(&["convert", "--to", "polar", "s3[0,0,1]"]).1, "s3p[1;1.57079632679,1.57079632679]\n");
    assert_eq!(call(&["roots", "c[-1,0]", "2"]).1, "c[0,1]\nc[0,-1]\n");
    assert_eq!(call(&["--digits", "3", "eval", "c[1,0] / c[3,0]"]).1, "c[0.333,0]\n");
}

#[test]
fn orientation_flag_changes_the_product() {
    let ccw = call(&["eval", "c[1,2,3] * c[0,1,0]"]).1;
    let cw = call(&["--orientation", "cw", "eval", "c[1,2,3] * c[0,1,0]"]).1;
    assert_ne!(ccw, cw);
    assert_eq!(ccw, call(&["--orientation", "ccw", "eval", "c[1,2,3] * c[0,1,0]"]).1);
}

#[test]
fn leading_minus_is_an_expression() {
    assert_eq!(call(&["eval", "-c[1,1]^2"]).1, "c[0,-2]\n");
}

#[test]
fn errors_map_to_exit_codes() {
    let (code, _, err) = call(&["eval", "c[1,1] +* c[1,1]"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("byte 8"), "{err}");
    assert!(err.contains("        ^"), "{err}");
    assert_eq!(call(&["eval", "c[1,2] + s3[1,2,3]"]).0, EXIT_PARSE);
    assert_eq!(call(&["eval", "c[1,1] / c[0,0]"]).0, EXIT_ARITH);
    assert_eq!(call(&["eval", "lift(c[0,0], 3)"]).0, EXIT_ARITH);
    assert_eq!(call(&["roots", "c[1,1]", "0"]).0, EXIT_PARSE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_PARSE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    assert_eq!(call(&["audit", "--law", "no_such_law"]).0, EXIT_PARSE);
}

#[test]
fn audit_reports_and_flags_failures() {
    let args = ["audit", "--dim", "2,3", "--samples", "200", "--law", "distributive"];
    let (code, out, _) = call(&args);
    assert_eq!(code, EXIT_AUDIT_FAILURES);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["passes"], 200);
    assert!(results[1]["counterexample"].is_object());

    let (code, _, _) = call(&["audit", "--dim", "2", "--samples", "100", "--law", "add_commutative"]);
    assert_eq!(code, EXIT_OK);

    let (_, md, _) = call(&["audit", "--dim", "2", "--samples", "50", "--law", "mul_commutative", "--format", "markdown"]);
    assert!(md.contains("| mul_commutative | 2 |"), "{md}");
}
