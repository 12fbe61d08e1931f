//! End-to-end checks of the command-line interface, run in-process.

use secant_designs::cli::{run_with, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("secant-designs").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn designs_one_verify_prints_parameters() {
    let (code, out, _) = run(&["designs", "--which", "1", "--verify"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("2-(36,6,2), b=84, r=14, flag-transitive: true\n"), "{out}");
}

#[test]
fn search_over_g_prints_summary() {
    let (code, out, _) = run(&["search", "--group", "G", "--lambda", "all"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("4 classes: λ=2 ×1, λ=6 ×3\n"), "{out}");
}

#[test]
fn search_writes_class_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("classes");
    let (code, _, _) = run(&["search", "--group", "Gprime", "--lambda", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(path.join("class1_lambda2.txt")).unwrap();
    assert!(text.starts_with("36 84 6\n"));
}

#[test]
fn pruned_search_refuses_unsound_lambda() {
    let (code, _, err) = run(&["search", "--group", "Gprime", "--lambda", "6"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("exhaustive"));
}

#[test]
fn params_rejects_non_divisor() {
    let (code, out, _) = run(&["params", "--k", "6", "--lambda", "4"]);
    assert_eq!(code, EXIT_FAIL);
    let report: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(report["status"], "fail");
    assert_eq!(report["check"], "admissibility");
    let (code, out, _) = run(&["params", "--k", "6", "--lambda", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("v=36, b=84, r=14, k=6, λ=2\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["designs", "--bogus"]).0, EXIT_USAGE);
    assert_eq!(run(&["nonsense"]).0, EXIT_USAGE);
    assert_eq!(run(&["search", "--lambda", "4"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "/nonexistent/design.txt"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}

#[test]
fn verify_reports_witness_pair_for_single_block() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.txt");
    std::fs::write(&path, "36 1 6\n0 1 2 3 4 5\n").unwrap();
    let (code, out, _) = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_FAIL);
    let report: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(report["detail"]["kind"], "non-constant-lambda");
    assert_eq!(report["detail"]["count"], 0);
}

#[test]
fn export_verify_roundtrip_and_flag_transitivity() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d1.txt");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["export", "--which", "1", "--out", p]).0, EXIT_OK);
    let (code, out, _) = run(&["verify", p, "--group", "Gprime"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("flag-transitive under Gprime (order 504): true"));
    let (code, out, _) = run(&["verify", p, "--group", "K"]);
    assert_eq!(code, EXIT_FAIL, "{out}");
}

#[test]
fn json_export_is_byte_stable() {
    let a = run(&["export", "--which", "2", "--format", "json"]).1;
    let b = run(&["export", "--which", "2", "--format", "json"]).1;
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["b"], 252);
    assert_eq!(v["params"]["lambda"], 6);
    assert_eq!(v["provenance"]["group"], "G");
}

#[test]
fn outputs_are_deterministic() {
    for args in [&["group"][..], &["orbits"], &["designs", "--verify", "--tactical"], &["iso", "2", "3", "--certificates"]] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn reports_use_named_points() {
    let (code, out, _) = run(&["orbits"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("(PP^γ)^C_G(γ): 6"));
    assert!(!out.contains("FAIL"));
    let (_, out, _) = run(&["geometry"]);
    assert!(out.contains("tangents: 9 (9 through N)"));
}

#[test]
fn aut_and_iso_commands() {
    let (code, out, _) = run(&["aut", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("|Aut(D3)| = 1512") && out.contains("contains G: true"));
    let (_, out, _) = run(&["iso", "D1", "1"]);
    assert!(out.contains("isomorphic: true"));
    let (_, out, _) = run(&["iso", "3", "4"]);
    assert!(out.contains("isomorphic: false"));
}
