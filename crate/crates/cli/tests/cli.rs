use std::path::{Path, PathBuf};

use serde_json::Value;
use xmodkit_cli::{
    run_command, Outcome, Report, Status, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_PASS,
};
use xmodkit_core::document::parse_document;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Outcome {
    run_command(["xmodkit"].iter().chain(args).map(|s| s.to_string()))
}

fn json(args: &[&str]) -> Report {
    let mut argv = vec!["--report", "json"];
    argv.extend_from_slice(args);
    let out = run(&argv);
    let parsed: Report = serde_json::from_str(&out.render()).expect("report is JSON");
    assert_eq!(parsed, out.report);
    assert_eq!(parsed.exit_code, out.exit_code);
    parsed
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("xmodkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn passing_check_exits_zero() {
    let r = json(&["check", &fixture("a3_s3_xmod.json")]);
    assert_eq!(r.exit_code, EXIT_PASS);
    assert_eq!(r.status, Status::Pass);
    assert!(r.first_failure().is_none());
}

#[test]
fn text_report_ends_with_result_line() {
    let out = run(&["check", &fixture("heis3_xmod.json")]);
    assert_eq!(out.exit_code, EXIT_PASS);
    let text = out.render();
    assert!(text.lines().any(|l| l.starts_with("  pass  ")));
    assert!(text
        .trim_end()
        .lines()
        .last()
        .unwrap()
        .starts_with("result: pass (exit 0)"));
}

#[test]
fn failing_check_carries_witness() {
    let r = json(&["check", &fixture("bad_peiffer.json")]);
    assert_eq!(r.exit_code, EXIT_CHECK_FAILED);
    assert_eq!(r.status, Status::Fail);
    let (_, c) = r.first_failure().unwrap();
    assert!(!c.witness.as_deref().unwrap_or("").is_empty());
}

#[test]
fn schema_error_exits_two_with_path() {
    let path = scratch("bad_schema.json");
    std::fs::write(
        &path,
        r#"{"schema": 1, "kind": "lie_algebra", "dim": 2, "bracket": [[0, 1, [1]], [0, 1]]}"#,
    )
    .unwrap();
    let r = json(&["check", path.to_str().unwrap()]);
    assert_eq!(r.exit_code, EXIT_INPUT_ERROR);
    assert_eq!(r.status, Status::InputError);
    let e = r.error.unwrap();
    assert_eq!(e.kind, "schema");
    assert!(e.path.is_some_and(|p| p.starts_with("bracket")));
}

#[test]
fn unknown_schema_version_is_rejected() {
    let path = scratch("schema2.json");
    std::fs::write(
        &path,
        r#"{"schema": 2, "kind": "lie_algebra", "dim": 1, "bracket": []}"#,
    )
    .unwrap();
    assert_eq!(
        json(&["check", path.to_str().unwrap()]).exit_code,
        EXIT_INPUT_ERROR
    );
}

#[test]
fn missing_file_is_an_input_error() {
    let r = json(&["check", "/nonexistent/x.json"]);
    assert_eq!(r.exit_code, EXIT_INPUT_ERROR);
}

#[test]
fn wrong_kind_exits_two() {
    let r = json(&["functor", &fixture("heis3.json"), "--apply", "kg"]);
    assert_eq!(r.exit_code, EXIT_INPUT_ERROR);
    assert_eq!(r.error.unwrap().kind, "wrong_kind");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).exit_code, 0);
    assert_eq!(run(&["--version"]).exit_code, 0);
    assert!(run(&["check", "--help"]).render().contains("--lie"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).exit_code, EXIT_INPUT_ERROR);
    assert_eq!(run(&["frobnicate"]).exit_code, EXIT_INPUT_ERROR);
    assert_eq!(
        run(&["convert", &fixture("a3_s3_xmod.json"), "--to", "nonsense"]).exit_code,
        EXIT_INPUT_ERROR
    );
}

#[test]
fn convert_output_reparses_and_checks() {
    let out = scratch("two_group.json");
    let r = json(&[
        "convert",
        &fixture("a3_s3_xmod.json"),
        "--to",
        "2group",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.exit_code, EXIT_PASS);
    let text = std::fs::read_to_string(&out).unwrap();
    let doc = parse_document(&text).unwrap();
    assert_eq!(doc.kind(), "two_group");
    assert_eq!(
        r.artifacts["output"],
        serde_json::from_str::<Value>(&text).unwrap()
    );
    assert_eq!(json(&["check", out.to_str().unwrap()]).exit_code, EXIT_PASS);
    let back = scratch("xmod_back.json");
    let r = json(&[
        "convert",
        out.to_str().unwrap(),
        "--to",
        "xmod",
        "-o",
        back.to_str().unwrap(),
    ]);
    assert_eq!(r.exit_code, EXIT_PASS);
    assert_eq!(
        json(&["check", back.to_str().unwrap()]).exit_code,
        EXIT_PASS
    );
}

#[test]
fn module_check_requires_lie() {
    let r = json(&["check", &fixture("heis3_trivial_module.json")]);
    assert_eq!(r.exit_code, EXIT_INPUT_ERROR);
    let r = json(&[
        "check",
        &fixture("heis3_trivial_module.json"),
        "--lie",
        &fixture("heis3.json"),
    ]);
    assert_eq!(r.exit_code, EXIT_PASS);
}

#[test]
fn cohomology_reports_dimension() {
    let r = json(&[
        "cohomology",
        &fixture("heis3.json"),
        &fixture("heis3_trivial_module.json"),
        "--degree",
        "3",
    ]);
    assert_eq!(r.exit_code, EXIT_PASS);
    assert_eq!(r.artifacts["dim"], Value::from(1));
}

#[test]
fn degree_bound_is_enforced() {
    let r = json(&[
        "--max-degree",
        "99",
        "functor",
        &fixture("heis3_xmod.json"),
        "--apply",
        "u",
    ]);
    assert_eq!(r.exit_code, EXIT_INPUT_ERROR);
}

#[test]
fn splice_of_closed_cocycle_passes() {
    let r = json(&[
        "splice",
        &fixture("heis3.json"),
        &fixture("heis3_nonsplit_ses.json"),
        &fixture("alpha_yz.json"),
    ]);
    assert_eq!(r.exit_code, EXIT_PASS);
    assert!(r.artifacts.contains_key("theta"));
}

#[test]
fn roundtrips_pass() {
    for (file, path) in [
        ("heis3_xmod.json", "u.p"),
        ("a3_s3_xmod.json", "kg.gl"),
        ("a3_s3_xmod.json", "kfun.chi"),
        ("a3_s3_xmod.json", "xmod.2g.xmod"),
        ("heis3_xmod.json", "xmod.2g.xmod"),
    ] {
        let r = json(&["roundtrip", &fixture(file), "--path", path]);
        assert_eq!(r.exit_code, EXIT_PASS, "{file} {path}");
    }
}
