use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagram-ops"))
        .args(args)
        .env("DIAGRAM_OPS_CACHE_DIR", cache)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], i32)] = &[
        (&["mult", "[1]", "[2]"], 0),
        (&["mult", "[1", "[2]"], 2),
        (&["schur", "[0]"], 2),
        (&["chartable", "11"], 3),
        (&["--max-degree", "15", "chartable", "3"], 3),
        (&["hurwitz", "--n", "2", "[3]"], 2),
        (&["hurwitz", "--n", "3", "[2]", "--final", "[2]"], 2),
        (&["wapply", "[4]", "p1", "--explicit"], 2),
        (&["selftest", "medium"], 2),
        (&["no-such-command"], 2),
    ];
    for (args, code) in cases {
        let out = run(dir.path(), args);
        assert_eq!(
            out.status.code(),
            Some(*code),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn json_error_envelope() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["--json", "chartable", "12"]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["error"]["kind"], "resource");
    assert!(v["error"]["msg"].as_str().unwrap().contains("12"));
}

#[test]
fn max_degree_raises_the_limit() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        dir.path(),
        &["--max-degree", "12", "--json", "chartable", "12"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.path().join("chartab_12.json").exists());
}

#[test]
fn corrupted_cache_is_repaired() {
    let dir = tempfile::tempdir().unwrap();
    let first = run(dir.path(), &["--json", "chartable", "4"]);
    assert!(first.status.success());
    let path = dir.path().join("chartab_4.json");
    let clean = fs::read_to_string(&path).unwrap();
    fs::write(&path, clean.replace("\"-1\"", "\"-9\"")).unwrap();

    let out = run(dir.path(), &["selftest", "quick"]);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("discarding cached table"), "{stderr}");
    assert_eq!(fs::read_to_string(&path).unwrap(), clean);
    assert_eq!(
        stdout(&run(dir.path(), &["--json", "chartable", "4"])),
        stdout(&first)
    );
}

#[test]
fn series_json_is_canonical() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        dir.path(),
        &[
            "--json",
            "evolve",
            "[2]",
            "[1]",
            "--p-bound",
            "2",
            "--order",
            "1",
        ],
    );
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with(r#"{"p_bound":2,"order":1,"terms":[{"beta":{},"mono":[],"coef":"1"}"#));
    assert!(text.contains(r#"{"beta":{"[1]":1},"mono":[1],"coef":"1"}"#));
    let again = run(
        dir.path(),
        &[
            "--json",
            "evolve",
            "[1]",
            "[2]",
            "--p-bound",
            "2",
            "--order",
            "1",
        ],
    );
    assert_eq!(stdout(&again), text);
}

#[test]
fn wapply_strategies_agree() {
    let dir = tempfile::tempdir().unwrap();
    for d in ["[1]", "[2]", "[1,1]", "[3]", "[2,1]", "[1,1,1]"] {
        let f = "p1^3 + 1/2*p1*p2 + -3*p3 + 2*p2^2";
        let a = run(dir.path(), &["wapply", d, f]);
        let b = run(dir.path(), &["wapply", d, f, "--explicit"]);
        assert!(a.status.success());
        assert_eq!(stdout(&a), stdout(&b), "W({d})");
    }
}
