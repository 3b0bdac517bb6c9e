//! Runs every `$ diagram-ops ...` line in the README and diffs stdout
//! against the lines that follow it.

use std::path::Path;
use std::process::Command;

struct Example {
    line: usize,
    args: Vec<String>,
    expected: String,
}

fn examples(text: &str) -> Vec<Example> {
    let mut out: Vec<Example> = Vec::new();
    let mut in_block = false;
    let mut current: Option<Example> = None;
    for (i, line) in text.lines().enumerate() {
        if line.starts_with("```") {
            in_block = !in_block;
            out.extend(current.take());
            continue;
        }
        if !in_block {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ diagram-ops ") {
            out.extend(current.take());
            current = Some(Example {
                line: i + 1,
                args: shlex::split(cmd).expect("well-formed shell line"),
                expected: String::new(),
            });
        } else if let Some(ex) = current.as_mut() {
            ex.expected.push_str(line);
            ex.expected.push('\n');
        }
    }
    out
}

#[test]
fn readme_examples_match() {
    let readme = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../README.md");
    let text = std::fs::read_to_string(&readme).unwrap();
    let found = examples(&text);
    assert!(found.len() >= 15, "only {} examples found", found.len());
    let cache = tempfile::tempdir().unwrap();
    let mut mismatches = Vec::new();
    for ex in &found {
        let output = Command::new(env!("CARGO_BIN_EXE_diagram-ops"))
            .args(&ex.args)
            .env("DIAGRAM_OPS_CACHE_DIR", cache.path())
            .output()
            .unwrap();
        let stdout = String::from_utf8(output.stdout).unwrap();
        if stdout != ex.expected {
            mismatches.push(format!(
                "README line {}: {:?}\n--- expected\n{}--- got\n{}",
                ex.line, ex.args, ex.expected, stdout
            ));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}
