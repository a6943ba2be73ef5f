use super::*;

fn hgx(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hgx").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn corpus_file(dir: &tempfile::TempDir, name: &str) -> String {
    let p = dir.path().join(format!("{name}.hgx"));
    std::fs::write(&p, corpus::entry(name).unwrap().source).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn check_slq2_passes() {
    let dir = tempfile::tempdir().unwrap();
    let f = corpus_file(&dir, "slq2");
    let (code, out, _) = hgx(&["check", &f, "--degree", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS SLq2/antipode"));
}

#[test]
fn check_fx_as_hopf_fails() {
    let dir = tempfile::tempdir().unwrap();
    let f = corpus_file(&dir, "fx");
    let (code, out, _) = hgx(&["check", &f, "--level", "hopf", "--degree", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("no antipode certified"), "{out}");
    assert_eq!(hgx(&["check", &f]).0, 0);
}

#[test]
fn degree_zero_passes() {
    let dir = tempfile::tempdir().unwrap();
    let f = corpus_file(&dir, "sweedler-h4");
    assert_eq!(hgx(&["check", &f, "--degree", "0"]).0, 0);
}

#[test]
fn json_report_shape_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let f = corpus_file(&dir, "taft-subgroup");
    let (code, a, _) = hgx(&["certify-qpb", &f, "--report", "json"]);
    assert_eq!(code, 0, "{a}");
    let (_, b, _) = hgx(&["certify-qpb", &f, "--report", "json"]);
    let strip = |s: &str| {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    assert_eq!(strip(&a), strip(&b));
    let v = strip(&a);
    assert_eq!(v["truncation"]["degree"], 4);
    assert_eq!(v["truncation"]["slack"], 2);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["name"].is_string() && c["verdict"] == "pass" && c.get("witness").is_some()));
    assert!(v["notes"].as_array().unwrap().iter().any(|n| n.as_str().unwrap().contains("balanced source dim 16, target dim 16")));
}

#[test]
fn laurent_is_galois_but_report_follows_exactness() {
    let dir = tempfile::tempdir().unwrap();
    let f = corpus_file(&dir, "laurent");
    let (code, out, _) = hgx(&["certify-galois", &f, "--degree", "4", "--slack", "4"]);
    assert!(out.contains("PASS self/hopf-galois"), "{out}");
    assert!(out.contains("PASS self/free"), "{out}");
    assert_eq!(code, if out.contains("FAIL") { 1 } else { 0 });
}

#[test]
fn truncated_polynomials_are_not_surjective() {
    let dir = tempfile::tempdir().unwrap();
    let f = corpus_file(&dir, "trunc-poly-z3");
    let (code, out, _) = hgx(&["certify-galois", &f]);
    assert_eq!(code, 1);
    let line = out.lines().find(|l| l.contains("grading/can-surjective")).unwrap();
    assert!(line.starts_with("FAIL") && line.contains(": "), "{line}");
}

#[test]
fn q_specialization() {
    let dir = tempfile::tempdir().unwrap();
    let f = corpus_file(&dir, "slq2");
    let (code, out, _) = hgx(&["check", &f, "--degree", "2", "--q", "2", "--report", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"q\": \"2\""), "{out}");
    assert_eq!(hgx(&["check", &f, "--q", "q"]).0, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hgx(&["corpus", "--name", "nosuch"]).0, 2);
    assert_eq!(hgx(&["corpus"]).0, 2);
    assert_eq!(hgx(&["frobnicate"]).0, 2);
    assert_eq!(hgx(&["check", "/nonexistent.hgx"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.hgx");
    std::fs::write(&p, "scalars QIQ algebra A { gens x rules x -> x*x coproduct x -> x (x) x counit x -> 1 }").unwrap();
    let (code, _, err) = hgx(&["check", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("1:"), "{err}");
    let (code, _, err) = hgx(&["certify-galois", &corpus_file(&dir, "sl2")]);
    assert_eq!(code, 2);
    assert!(err.contains("no coaction"), "{err}");
}

#[test]
fn corpus_single_entry_and_export() {
    let (code, out, _) = hgx(&["corpus", "--name", "sweedler-h4"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = hgx(&["corpus", "--name", "oxg"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL oxg/exact"), "{out}");
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = hgx(&["corpus", "--export", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(dir.path().join("glq2-over-t.hgx").exists());
}
