//! Integration tests for the `ribbonkit` binary: verbs, formats, and exit
//! codes (0 success, 1 bad input, 2 budget).

use std::path::Path;
use std::process::{Command, Output};

use ribbonkit::code::RibbonCode;
use ribbonkit::enumerate;
use ribbonkit::knotdb;
use ribbonkit::seifert;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ribbonkit"))
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn alex_reports_class_and_determinant() {
    let output = run(&["alex", &data("six1.code")]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("alexander class: 2,-5"), "{text}");
    assert!(text.contains("determinant: 9"), "{text}");
}

#[test]
fn alex_missing_file_exits_one() {
    let output = run(&["alex", "no-such-file.code"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn malformed_code_exits_one() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("bad.code");
    std::fs::write(&path, "vertices 2\nedge 1 3 : 1").expect("write");
    let output = run(&["alex", path.to_str().expect("UTF-8 path")]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn reduce_emits_an_equivalent_irreducible_code() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("reducible.code");
    let text = "vertices 3\nedge 1 2 : 2 1\nedge 2 3 :";
    std::fs::write(&path, text).expect("write");
    let output = run(&["reduce", path.to_str().expect("UTF-8 path")]);
    assert!(output.status.success());
    let reduced = RibbonCode::parse(&stdout_of(&output)).expect("output parses");
    assert!(reduced.is_irreducible());
    let original = RibbonCode::parse(text).expect("input parses");
    assert_eq!(seifert::alexander(&reduced), seifert::alexander(&original));
}

#[test]
fn enumerate_matches_the_library_cache_text() {
    let output = run(&["enumerate", "2"]);
    assert!(output.status.success());
    let expected = enumerate::enumerate_report(2)
        .expect("small budget")
        .to_cache_text();
    assert_eq!(stdout_of(&output), expected);
}

#[test]
fn enumerate_budget_refusals_exit_two() {
    let output = run(&["enumerate", "5"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["enumerate", "6", "--allow-large"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn bound_reports_every_bundled_row_tight() {
    let output = run(&["bound"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(
        text.contains("58 records: 58 tight, 0 conflicting"),
        "{text}"
    );
}

#[test]
fn bound_accepts_cached_set_files() {
    let dir = tempfile::tempdir().expect("tempdir");
    let sets_dir = dir.path().join("sets");
    let output = run(&[
        "enumerate",
        "3",
        "--out",
        sets_dir.to_str().expect("UTF-8 path"),
    ]);
    assert!(output.status.success());
    for k in 0..=3 {
        assert!(sets_dir.join(format!("r{k}.ribbonset")).exists());
    }
    let output = run(&["--sets", sets_dir.to_str().expect("UTF-8 path"), "bound"]);
    assert!(output.status.success());
    assert!(stdout_of(&output).contains("58 records: 58 tight, 0 conflicting"));
}

#[test]
fn bound_rejects_gapped_set_caches() {
    let dir = tempfile::tempdir().expect("tempdir");
    let report = enumerate::enumerate_report(2).expect("small budget");
    let path = dir.path().join("r2.ribbonset");
    report
        .save(std::fs::File::create(&path).expect("create"))
        .expect("save");
    let output = run(&["--sets", dir.path().to_str().expect("UTF-8 path"), "bound"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn upper_reports_gauss_statistics() {
    let output = run(&["upper", &data("trefoil.gauss")]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("crossings: 3"), "{text}");
    assert!(text.contains("underpasses needed: <= 2"), "{text}");
}

#[test]
fn upper_reports_fusion_bounds_for_tables() {
    let output = run(&["upper", &data("table1.csv")]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(
        text.contains("6_1: ribbon number <= 2 (explicit band presentation); fusion number <= 1"),
        "{text}"
    );
}

#[test]
fn jones_reports_squared_determinant_and_budget() {
    let output = run(&["jones", &data("six1.pd"), "-r", "1"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("squared determinant: 81"), "{text}");
    assert!(text.contains("smallest compatible fusion budget: 1"), "{text}");
    assert!(text.contains("budget 1: compatible"), "{text}");
}

#[test]
fn jones_rejects_an_overclaimed_component_count() {
    let output = run(&["jones", &data("trefoil.pd"), "--components", "2"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(
        text.contains("divisible as a 2-component bracket: NO (obstructed)"),
        "{text}"
    );
}

#[test]
fn tables_csv_round_trips_through_the_loader() {
    let output = run(&["tables", "--csv"]);
    assert!(output.status.success());
    let records = knotdb::load_csv(output.stdout.as_slice()).expect("valid CSV");
    assert_eq!(records.len(), 58);
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    let output = run(&["no-such-verb"]);
    assert_eq!(output.status.code(), Some(1));
    let output = run(&["--help"]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn demo_inputs_exist() {
    for name in [
        "trefoil.pd",
        "figure8.pd",
        "six1.pd",
        "hopf.pd",
        "unknot.pd",
        "unlink2.pd",
        "trefoil.gauss",
        "six1.code",
        "star.code",
    ] {
        assert!(Path::new(&data(name)).exists(), "missing {name}");
    }
}
