//! Each `tests/golden/*.golden` file starts with `$ asympoly <args>`; the
//! remaining lines are the expected stdout.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

/// Splits a command line on spaces, keeping double-quoted words intact.
fn split_args(line: &str) -> Vec<String> {
    let mut args = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut pending = false;
    for ch in line.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                pending = true;
            }
            ' ' if !quoted => {
                if pending {
                    args.push(std::mem::take(&mut cur));
                    pending = false;
                }
            }
            _ => {
                cur.push(ch);
                pending = true;
            }
        }
    }
    if pending {
        args.push(cur);
    }
    args
}

fn asympoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asympoly"))
        .args(args)
        .env_remove("ASYMPOLY_THREADS")
        .output()
        .expect("binary runs")
}

#[test]
fn golden_files() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut paths: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "golden"))
        .collect();
    paths.sort();
    assert!(!paths.is_empty());
    for path in paths {
        let text = fs::read_to_string(&path).unwrap();
        let (command, expected) = text.split_once('\n').unwrap();
        let args = split_args(command.strip_prefix("$ asympoly ").expect("command line"));
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = asympoly(&args);
        let stdout = String::from_utf8(out.stdout).unwrap();
        assert!(out.status.success(), "{}: {}", path.display(), String::from_utf8_lossy(&out.stderr));
        assert_eq!(stdout, expected, "{}", path.display());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "agreement", "--max-entry", "2", "--max-len", "3"];
    let first = asympoly(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, asympoly(&args).stdout);
}

#[test]
fn usage_errors_exit_2_with_one_line() {
    for args in [
        &["basis", "--id", "nope", "--index", "(1)", "--n", "1"][..],
        &["basis", "--id", "key", "--index", "(1,2", "--n", "2"],
        &["basis", "--id", "key", "--index", "(1,2)", "--n", "1"],
        &["expand", "--source", "s", "--index", "(1,2)", "--target", "m"],
        &["enumerate", "--object", "pipedreams", "--index", "(1,2)"],
        &["frobnicate"],
    ] {
        let out = asympoly(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let stderr = String::from_utf8(out.stderr).unwrap();
        assert_eq!(stderr.lines().count(), 1, "{args:?}: {stderr}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_asympoly"))
        .args(["basis", "--id", "x", "--index", "(1)", "--n", "1"])
        .env("ASYMPOLY_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["verify", "--suite", "products", "--max-entry", "2", "--max-len", "2"];
    let out = Command::new(env!("CARGO_BIN_EXE_asympoly"))
        .args(args)
        .env("ASYMPOLY_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(out.stdout, asympoly(&args).stdout);
}

#[test]
fn structured_output_is_json() {
    let out = asympoly(&["multiply", "--basis", "M", "--a", "(2)", "--b", "(1,2)", "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["solver"]["terms"].as_array().unwrap().len(), 4);
    assert_eq!(v["rule"], "oshuffle");
}
