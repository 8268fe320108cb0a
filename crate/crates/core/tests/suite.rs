use lalg_core::suite::{run_paper_suite, write_fixtures, FixtureSource, SetupError, SuiteConfig};
use serde_json::Value;

fn dir_config(dir: &std::path::Path) -> SuiteConfig {
    SuiteConfig {
        max_order: 3,
        fixtures: FixtureSource::Directory(dir.to_path_buf()),
    }
}

fn edit(dir: &std::path::Path, file: &str, f: impl FnOnce(&mut Value)) {
    let path = dir.join(file);
    let mut v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    f(&mut v);
    std::fs::write(path, serde_json::to_vec_pretty(&v).unwrap()).unwrap();
}

#[test]
fn pristine_run_passes() {
    let report = run_paper_suite(&SuiteConfig::default()).unwrap();
    assert!(report.all_passed(), "{}", report.to_json_pretty());
    assert!(report.checks.len() > 20);

    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();
    let from_disk = run_paper_suite(&dir_config(dir.path())).unwrap();
    assert!(from_disk.all_passed());
}

#[test]
fn deterministic_apart_from_timing() {
    let mut a = run_paper_suite(&SuiteConfig::default()).unwrap();
    let mut b = run_paper_suite(&SuiteConfig::default()).unwrap();
    a.timing_ms = 0;
    b.timing_ms = 0;
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn table2_declared_l_fails_with_ab() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();
    edit(dir.path(), "table2.json", |v| v["kind"] = "l".into());
    let report = run_paper_suite(&dir_config(dir.path())).unwrap();
    assert!(!report.all_passed());
    let failed: Vec<_> = report.failed().collect();
    assert_eq!(failed.len(), 1, "{}", report.to_json_pretty());
    assert!(failed[0].name.starts_with("table2.declared-kind"));
    assert_eq!(
        failed[0].witnesses,
        vec![serde_json::json!({"axiom": "antisymmetric", "witness": ["a", "b"]})]
    );
}

#[test]
fn corrupted_table1_reports_a_cycloid_triple() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();
    // x·y := z
    edit(dir.path(), "table1.json", |v| v["table"][0][1] = 2.into());
    let report = run_paper_suite(&dir_config(dir.path())).unwrap();
    let kind = report
        .checks
        .iter()
        .find(|c| c.name.starts_with("table1.declared-kind"))
        .unwrap();
    assert!(!kind.passed);
    let triple = kind
        .witnesses
        .iter()
        .find(|w| w["axiom"] == "cycloid")
        .expect("a cycloid witness");
    assert_eq!(triple["witness"], serde_json::json!(["x", "y", "z"]));
}

#[test]
fn missing_fixture_is_a_setup_error() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();
    std::fs::remove_file(dir.path().join("two_element.json")).unwrap();
    match run_paper_suite(&dir_config(dir.path())) {
        Err(SetupError::MissingFixture { path, .. }) => {
            assert!(path.ends_with("two_element.json"))
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn malformed_fixture_is_a_setup_error() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();
    std::fs::write(dir.path().join("table1.json"), "{").unwrap();
    assert!(matches!(
        run_paper_suite(&dir_config(dir.path())),
        Err(SetupError::BadFixture { .. })
    ));
}

#[test]
fn order_bound_is_enforced() {
    let config = SuiteConfig {
        max_order: 6,
        ..SuiteConfig::default()
    };
    assert!(matches!(
        run_paper_suite(&config),
        Err(SetupError::Config(_))
    ));
}
