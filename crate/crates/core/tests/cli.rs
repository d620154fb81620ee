use std::process::{Command, Output};

fn deltakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltakit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn delta_and_lengths_text() {
    let o = deltakit(&["delta", "6,13,14,16"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "Δ(S) = {1, 3}\n");

    let o = deltakit(&["lengths", "4,9,11", "--element", "36"]);
    assert_eq!(stdout(&o), "{4, 6, 9}\n");

    let o = deltakit(&["delta", "<6, 13, 14, 16>", "--bound", "40"]);
    assert_eq!(stdout(&o), "Δ(S) ⊇ {1, 3} (partial scan up to 40)\n");
}

#[test]
fn exit_codes() {
    assert_eq!(deltakit(&["delta", "4,6"]).status.code(), Some(2));
    assert_eq!(deltakit(&["delta", "0,3"]).status.code(), Some(2));
    assert_eq!(deltakit(&["nonsense"]).status.code(), Some(2));
    assert_eq!(deltakit(&["family", "minpres", "2", "2"]).status.code(), Some(2));
    assert_eq!(deltakit(&["family", "symmetric-d", "1", "9"]).status.code(), Some(2));
    assert_eq!(deltakit(&["--help"]).status.code(), Some(0));

    let o = deltakit(&["family", "minpres", "3", "2", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("PASS (9 checks)"));
}

#[test]
fn json_round_trips_byte_for_byte() {
    let cases: &[&[&str]] = &[
        &["delta", "6,13,14,16", "--json"],
        &["lengths", "4,9,11", "--element", "36", "--json"],
        &["factorizations", "4,9,11", "--element", "36", "--json"],
        &["betti", "6,13,14,16", "--json"],
        &["minpres", "7,15,17", "--verify-bound", "500", "--json"],
        &["ed3", "4,9,11", "--json"],
        &["ed3", "8,9,15", "--json"],
        &["family", "con3a", "2", "--verify", "--json"],
        &["family", "power", "4", "-2", "3", "3", "--three-generator", "--json"],
        &["search", "--target-kind", "delta-x", "--target", "2,3", "--max-gen", "11", "--max-e", "3", "--exhaustive", "--json"],
    ];
    for args in cases {
        let o = deltakit(args);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let text = stdout(&o);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap() + "\n", text, "{args:?}");
        assert_eq!(text, stdout(&deltakit(args)), "{args:?} not deterministic");
    }
}

#[test]
fn typed_json_round_trip() {
    let o = deltakit(&["family", "minpres", "3", "2", "--verify", "--json"]);
    let text = stdout(&o);
    let report: deltakit::families::FamilyReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap() + "\n", text);

    let o = deltakit(&["search", "--target-kind", "delta-s", "--target", "1,3", "--max-gen", "16", "--max-e", "4", "--json"]);
    let text = stdout(&o);
    let outcome: deltakit::search::SearchOutcome = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&outcome).unwrap() + "\n", text);
    assert_eq!(outcome.witnesses[0].generators, vec![6, 13, 14, 16]);
}

#[test]
fn thread_count_does_not_change_output() {
    let base = ["search", "--target-kind", "delta-s", "--target", "1,2", "--max-gen", "12", "--max-e", "3", "--exhaustive", "--json"];
    let one = stdout(&deltakit(&[&base[..], &["--threads", "1"]].concat()));
    let three = stdout(&deltakit(&[&base[..], &["--threads", "3"]].concat()));
    assert_eq!(one, three);
    assert!(one.contains("\"witnesses\":[{"));
}

#[test]
fn search_reports_bounded_failure() {
    let o = deltakit(&["search", "--target-kind", "delta-s", "--target", "1,3,6", "--max-gen", "10", "--max-e", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("no witness within bounds"));

    let o = deltakit(&["search", "--target-kind", "lengths-x", "--target", "1,2", "--max-gen", "10", "--max-e", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_with_catalog_is_resumable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.jsonl");
    let path = path.to_str().unwrap();
    let args = ["search", "--target-kind", "delta-s", "--target", "1", "--max-gen", "7", "--max-e", "3", "--exhaustive", "--catalog", path];
    let first = stdout(&deltakit(&args));
    let lines = std::fs::read_to_string(path).unwrap().lines().count();
    let second = stdout(&deltakit(&args));
    assert_eq!(first, second);
    assert_eq!(std::fs::read_to_string(path).unwrap().lines().count(), lines);
    assert!(lines > 10);
}
