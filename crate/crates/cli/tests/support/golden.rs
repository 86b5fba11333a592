//! Golden-file runner shared by the golden and acceptance tests.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn cases() -> Vec<Case> {
    let text =
        std::fs::read_to_string(root().join("tests/golden/commands.txt")).expect("command list");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once(':').expect("name: args");
            Case {
                name: name.trim().to_string(),
                args: args.split_whitespace().map(String::from).collect(),
            }
        })
        .collect()
}

/// Exit code, stdout and stderr in one transcript.
pub fn transcript(case: &Case) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_pi-atlas"))
        .args(&case.args)
        .current_dir(root().join("corpus"))
        .output()
        .expect("run pi-atlas");
    format!(
        "exit {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

pub fn golden_path(case: &Case) -> PathBuf {
    root()
        .join("tests/golden")
        .join(format!("{}.txt", case.name))
}

/// Runs every case twice; returns the names that were not byte-identical
/// across runs or against their golden file. `UPDATE_GOLDEN=1` rewrites
/// the golden files instead.
pub fn check_all() -> (usize, Vec<String>) {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let cases = cases();
    let mut bad = Vec::new();
    for case in &cases {
        let first = transcript(case);
        let second = transcript(case);
        let path = golden_path(case);
        if update {
            std::fs::write(&path, &first).expect("write golden file");
        }
        let expected = std::fs::read_to_string(Path::new(&path)).unwrap_or_default();
        if first != second || first != expected {
            bad.push(case.name.clone());
        }
    }
    (cases.len(), bad)
}
