use std::fs;
use std::path::PathBuf;

use indivisibles::dsl::{run_script, DslError};

fn scripts_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scripts")
}

#[test]
fn corpus_passes() {
    let mut names: Vec<_> = fs::read_dir(scripts_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "igeo"))
        .collect();
    names.sort();
    assert_eq!(names.len(), 12, "{names:?}");
    for path in names {
        let src = fs::read_to_string(&path).unwrap();
        let report = run_script(&src).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(report.passed(), "{}:\n{report}", path.display());
        assert!(!report.records.is_empty());
    }
}

#[test]
fn designed_failure_fails_once() {
    let src = fs::read_to_string(scripts_dir().join("negative/designed_failure.igeo")).unwrap();
    let report = run_script(&src).unwrap();
    assert_eq!(report.failures().count(), 1);
    let f = report.failures().next().unwrap();
    assert!((f.difference - (4.0 - std::f64::consts::PI)).abs() < 1e-15);
}

#[test]
fn parse_error_position() {
    let src = fs::read_to_string(scripts_dir().join("negative/parse_error.igeo")).unwrap();
    match run_script(&src) {
        Err(DslError::Parse(e)) => {
            assert_eq!((e.line, e.column), (2, 18));
            assert_eq!(e.expected, "NUMBER");
        }
        other => panic!("{other:?}"),
    }
}
