//! Golden files and schema validation shared by the CLI tests and the
//! acceptance suite.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use ssalg_cli::{run, Outcome};

pub fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn repo() -> PathBuf {
    manifest().join("../..")
}

pub fn bless() -> bool {
    std::env::var("SSALG_BLESS").is_ok_and(|v| v == "1")
}

/// `$ ssalg …` lines inside console blocks of the README.
pub fn documented_invocations() -> Vec<String> {
    let readme = fs::read_to_string(repo().join("README.md")).expect("README.md");
    let mut out = Vec::new();
    let mut in_console = false;
    for line in readme.lines() {
        if line.starts_with("```") {
            in_console = line.trim() == "```console";
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ ") {
            if in_console && cmd.starts_with("ssalg ") {
                out.push(cmd.to_string());
            }
        }
    }
    out
}

pub fn argv(cmd: &str) -> Vec<String> {
    shlex::split(cmd)
        .expect("well-quoted example")
        .into_iter()
        .map(|a| {
            if a.starts_with("crates/") {
                repo().join(&a).to_string_lossy().into_owned()
            } else {
                a
            }
        })
        .collect()
}

pub fn slug(cmd: &str) -> String {
    let mut s: String = cmd
        .trim_start_matches("ssalg ")
        .replace("crates/cli/inputs/", "")
        .replace(".json", "")
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
        .collect();
    while s.contains("__") {
        s = s.replace("__", "_");
    }
    s.trim_matches('_').to_string()
}

pub fn rendered(o: &Outcome) -> String {
    format!("exit {}\n{}", o.code, o.stdout)
}

pub fn compare_golden(path: &Path, actual: &str) {
    if bless() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert!(expected == actual, "{} differs from the current output", path.display());
}

pub fn schema(name: &str) -> jsonschema::JSONSchema {
    let text = fs::read_to_string(manifest().join("schemas").join(name)).unwrap_or_else(|_| panic!("schema {name}"));
    let doc: Value = serde_json::from_str(&text).expect("schema is JSON");
    jsonschema::JSONSchema::compile(&doc).unwrap_or_else(|e| panic!("schema {name} does not compile: {e}"))
}

pub fn validate(schema_name: &str, doc: &Value) {
    let s = schema(schema_name);
    let msgs: Vec<String> = match s.validate(doc) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{e} at {}", e.instance_path)).collect(),
    };
    panic!("document violates {schema_name}: {msgs:?}");
}

pub fn validate_output(stdout: &str) {
    let doc: Value = serde_json::from_str(stdout).expect("JSON output");
    let kind = doc["kind"].as_str().expect("every JSON output has a kind");
    validate(&format!("{kind}.schema.json"), &doc);
}

/// Reruns every documented invocation and `figures`, returning each
/// difference from the golden files and each schema violation.
pub fn golden_mismatches() -> Vec<String> {
    let mut problems = Vec::new();
    let golden = manifest().join("tests/golden/examples");
    for cmd in documented_invocations() {
        if cmd.starts_with("ssalg figures") {
            continue;
        }
        let out = run(argv(&cmd));
        let path = golden.join(format!("{}.out", slug(&cmd)));
        match fs::read_to_string(&path) {
            Ok(expected) if expected == rendered(&out) => {}
            Ok(_) => problems.push(format!("{cmd}: output differs from {}", path.display())),
            Err(_) => problems.push(format!("{cmd}: no golden file")),
        }
        if out.code != 2 && out.stdout.trim_start().starts_with('{') {
            if let Err(e) = schema_errors(&out.stdout) {
                problems.push(format!("{cmd}: {e}"));
            }
        }
    }
    let dir = tempfile::tempdir().expect("temporary directory");
    let out = run(["ssalg", "figures", "--out", dir.path().to_str().unwrap()]);
    if out.code != 0 {
        problems.push(format!("figures: exit {}", out.code));
    }
    for name in ["fig1-left.svg", "fig1-right.svg", "fig2-e2.svg", "fig2-einf.svg"] {
        let actual = fs::read_to_string(dir.path().join(name)).unwrap_or_default();
        let expected = fs::read_to_string(manifest().join("tests/golden/figures").join(name)).unwrap_or_default();
        if actual.is_empty() || actual != expected {
            problems.push(format!("figures: {name} differs from its golden copy"));
        }
    }
    problems
}

fn schema_errors(stdout: &str) -> Result<(), String> {
    let doc: Value = serde_json::from_str(stdout).map_err(|e| e.to_string())?;
    let kind = doc["kind"].as_str().ok_or("output has no kind")?;
    let s = schema(&format!("{kind}.schema.json"));
    let msgs: Vec<String> = match s.validate(&doc) {
        Ok(()) => return Ok(()),
        Err(errors) => errors.map(|e| format!("{e} at {}", e.instance_path)).collect(),
    };
    Err(format!("violates {kind}: {msgs:?}"))
}
