use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn dimpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dimpoly")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json {e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn example_ex_for_k_two() {
    let out = dimpoly(&["example-ex", "--k", "2"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["charpoly"], 18);
    assert_eq!(v["expected"], 18);
    assert_eq!(v["match"], true);
}

#[test]
fn example_ex_small_family() {
    for (k, want) in [(1, 2), (3, 72)] {
        let out = dimpoly(&["example-ex", "--k", &k.to_string()]);
        assert_eq!(json_of(&out)["charpoly"], want);
    }
}

#[test]
fn dimpoly_with_verification() {
    let out = dimpoly(&["dimpoly", "--json", r#"{"m":2,"rows":[[1,1]]}"#, "--verify-upto", "10"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["polynomial"]["standard_coeffs"], serde_json::json!([2, -1]));
    assert_eq!(v["polynomial"]["expanded"], "2*s + 1");
    assert_eq!(v["stability_bound"], 2);
    assert_eq!(v["verification"]["passed"], true);
}

#[test]
fn dimpoly_reads_text_file_and_is_row_order_invariant() {
    let mut a = tempfile::NamedTempFile::new().unwrap();
    writeln!(a, "3\n2 0 0\n0 1 1\n1 1 0").unwrap();
    let mut b = tempfile::NamedTempFile::new().unwrap();
    writeln!(b, "3\n1 1 0\n2 0 0\n0 1 1\n2 0 1").unwrap();
    let oa = dimpoly(&["dimpoly", "-i", a.path().to_str().unwrap()]);
    let ob = dimpoly(&["dimpoly", "-i", b.path().to_str().unwrap()]);
    assert!(oa.status.success());
    assert_eq!(oa.stdout, ob.stdout);
}

#[test]
fn bound_closed_codim_one() {
    let v = json_of(&dimpoly(&["bound", "--codim", "1", "--orders", "2,3"]));
    assert_eq!(v["bound"], 5);
    assert!(v.get("derivation").is_none());
}

#[test]
fn bound_general_with_trace() {
    let v = json_of(&dimpoly(&["bound", "--codim", "3", "--orders", "2", "--general", "--trace"]));
    assert_eq!(v["bound"], 18);
    assert_eq!(v["derivation"]["b"], serde_json::json!([2, 4, 0]));
    assert_eq!(v["derivation"]["c"], serde_json::json!([2, 6, 6]));
    assert_eq!(v["discrepancy_flags"], serde_json::json!([]));
}

#[test]
fn bound_general_codim_five_reports_discrepancy() {
    let v = json_of(&dimpoly(&["bound", "--codim", "5", "--orders", "1", "--general"]));
    assert_eq!(v["bound"], 36);
    assert_eq!(v["closed_form"], 144);
    assert_eq!(v["discrepancy_flags"].as_array().unwrap().len(), 1);
}

#[test]
fn huge_bounds_are_strings() {
    let v = json_of(&dimpoly(&["bound", "--codim", "7", "--orders", "3", "--general"]));
    assert!(v["bound"].is_string());
}

#[test]
fn unsupported_codim_exits_with_structured_error() {
    let out = dimpoly(&["bound", "--codim", "6", "--orders", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["kind"], "unsupported_codim");
}

#[test]
fn parse_failure_exits_one() {
    let out = dimpoly(&["dimpoly", "--json", "{not json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["kind"], "invalid_input");
}

#[test]
fn mincoeffs_and_in_w() {
    let v = json_of(&dimpoly(&["mincoeffs", "--json", r#"{"standard_coeffs":[1,0]}"#]));
    assert_eq!(v["minimizing_coefficients"], serde_json::json!([1, 0]));
    let v = json_of(&dimpoly(&["in-w", "--json", r#"{"standard_coeffs":[2,-2]}"#]));
    assert_eq!(v["in_w"], false);
    assert_eq!(v["witness"]["index"], 0);
    let v = json_of(&dimpoly(&["in-w", "--json", r#"{"m":2,"rows":[[1,1]]}"#]));
    assert_eq!(v["in_w"], true);
}

#[test]
fn jacobi_inputs() {
    let v = json_of(&dimpoly(&["jacobi", "--json", "[[1,2],[3,4]]"]));
    assert_eq!(v["jacobi_number"], 5);
    let v = json_of(&dimpoly(&["jacobi", "--json", r#"{"matrix":[[1,null],[null,null]]}"#]));
    assert!(v["jacobi_number"].is_null());
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "- 2\n3 -").unwrap();
    let out = dimpoly(&["jacobi", "-i", f.path().to_str().unwrap(), "--format", "text"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "5");
}

#[test]
fn charpoly_of_generators() {
    let system = r#"{"m":2,"n":1,"generators":[
        {"terms":[{"exp":[2,0],"comp":1,"coef":1},{"exp":[0,2],"comp":1,"coef":-1}]},
        {"terms":[{"exp":[1,1],"comp":1,"coef":"1"}]}]}"#;
    let v = json_of(&dimpoly(&["charpoly", "--json", system]));
    assert_eq!(v["polynomial"]["standard_coeffs"], serde_json::json!([]));
    assert_eq!(v["invariants"]["kind"], "null_module");
}

#[test]
fn verify_witness_and_codim_one() {
    let witness = r#"{"m":4,"n":1,"orders":[2],"leader_matrices":[{"rows":[[2,0,0,0],[0,2,0,0],[1,0,2,1],[0,0,4,2]]}]}"#;
    let out = dimpoly(&["verify", "--json", witness]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json_of(&out);
    assert_eq!(v["invariants"]["codimension"], 3);
    assert_eq!(v["invariants"]["typical_dimension"], 18);
    assert_eq!(v["report"]["bound"], 18);
    assert_eq!(v["holds"], true);

    let system = r#"{"m":2,"n":1,"generators":[{"terms":[{"exp":[1,1],"comp":1,"coef":1}]}]}"#;
    let v = json_of(&dimpoly(&["verify", "--json", system]));
    assert_eq!(v["invariants"]["codimension"], 1);
    assert_eq!(v["report"]["bound"], 2);
}

#[test]
fn verify_reports_violation_with_exit_two() {
    // Declared orders too small for the leaders: the bound check fails.
    let system = r#"{"m":4,"n":1,"orders":[1],"leader_matrices":[{"rows":[[2,0,0,0],[0,2,0,0],[1,0,2,1],[0,0,4,2]]}]}"#;
    let out = dimpoly(&["verify", "--json", system]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["holds"], false);
}

#[test]
fn output_is_deterministic() {
    let a = dimpoly(&["bound", "--codim", "4", "--orders", "3", "--general", "--trace"]);
    let b = dimpoly(&["bound", "--codim", "4", "--orders", "3", "--general", "--trace"]);
    assert_eq!(a.stdout, b.stdout);
}
