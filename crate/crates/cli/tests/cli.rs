//! End-to-end tests of the command-line surface: exit codes, diagnostics,
//! file round trips, and report determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn minext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minext"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("minext-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn classify_field_extension_is_type_p() {
    let out = minext(&["classify", "--base", "catalog:gf(2)", "--ext", "catalog:gf(4)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("type P\n"));
}

#[test]
fn classify_rejects_a_non_prime_base_with_exit_1() {
    let out = minext(&[
        "classify",
        "--base",
        "catalog:zmod(4)",
        "--ext",
        "catalog:product(zmod(4), zmod(4))",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_requires_an_embedding() {
    let out = minext(&["classify", "--base", "catalog:gf(3)", "--ext", "catalog:gf(4)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no unital embedding"));
}

#[test]
fn validate_reports_the_missing_mul_record() {
    let path = tmp_path("broken.ring");
    std::fs::write(
        &path,
        "ring r\ncarrier 2 2\nunity 1 0\nmul 0 0 = 1 0\nmul 0 1 = 0 1\nmul 1 1 = 0 1\nend\n",
    )
    .unwrap();
    let out = minext(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let diag = stderr(&out);
    assert!(diag.contains("broken.ring:1"), "diagnostic names file and line: {diag}");
    assert!(diag.contains("missing record `mul 1 0`"), "diagnostic names the rule: {diag}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn validate_rejects_a_false_unity() {
    let path = tmp_path("nonunital.ring");
    // zero multiplication, so the claimed unity is not one
    std::fs::write(&path, "ring r\ncarrier 2\nunity 1\nmul 0 0 = 0\nend\n").unwrap();
    let out = minext(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn emitted_files_round_trip_through_validate_and_classify() {
    let rrng_path = tmp_path("twist.rrng");
    let ring_path = tmp_path("twist-ext.ring");
    let emitted = minext(&["catalog", "emit", "twisted_field(4, 1)"]);
    assert_eq!(emitted.status.code(), Some(0));
    std::fs::write(&rrng_path, stdout(&emitted)).unwrap();

    let ok = minext(&["validate", rrng_path.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));

    let ext = minext(&[
        "extend",
        "--rrng",
        rrng_path.to_str().unwrap(),
        "--out",
        ring_path.to_str().unwrap(),
    ]);
    assert_eq!(ext.status.code(), Some(0), "{}", stderr(&ext));

    let ok = minext(&["validate", ring_path.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));

    // F_4 ∝ F_4^σ is a (non-central) trivial extension: type N
    let cls = minext(&["classify", "--base", "catalog:gf(4)", "--ext", ring_path.to_str().unwrap()]);
    assert_eq!(cls.status.code(), Some(0), "{}", stderr(&cls));
    assert!(stdout(&cls).starts_with("type N\n"));

    let central = minext(&[
        "classify",
        "--base",
        "catalog:gf(4)",
        "--ext",
        ring_path.to_str().unwrap(),
        "--central",
    ]);
    assert_eq!(central.status.code(), Some(1), "twisted extension is not central");

    std::fs::remove_file(&rrng_path).ok();
    std::fs::remove_file(&ring_path).ok();
}

#[test]
fn enumerate_lists_the_six_ideals_of_zmod12() {
    let out = minext(&["enumerate", "--ideals", "catalog:zmod(12)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(text.ends_with("total 6\n"));
    assert!(text.starts_with("ideal {0}\n"));
}

#[test]
fn enumerate_subrings_over_the_scalar_restriction() {
    let out = minext(&[
        "enumerate",
        "--subrings-over",
        "catalog:ideal_as_rrng(zmod(4), 2)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("total 2\n"));
}

#[test]
fn verify_emits_the_summary_line_and_is_deterministic() {
    let a = minext(&["verify", "--suite", "minimalann", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0));
    let text = stdout(&a);
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("SUITE minimalann: "), "summary line: {last}");
    assert!(last.ends_with(" PASS"));
    let b = minext(&["verify", "--suite", "minimalann", "--jobs", "3"]);
    assert_eq!(stdout(&b), text, "report is independent of --jobs");
}

#[test]
fn verify_rejects_an_unknown_suite() {
    let out = minext(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_list_names_every_constructor() {
    let out = minext(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["zmod", "gf", "mat", "tri", "product", "bergman_level"] {
        assert!(text.contains(name), "missing constructor {name}");
    }
}

#[test]
fn catalog_emit_rejects_items_without_a_file_form() {
    let out = minext(&["catalog", "emit", "regular_embed(4)"]);
    assert_eq!(out.status.code(), Some(2));
}
