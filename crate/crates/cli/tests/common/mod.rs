#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub fn fixture_dir(dir: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(dir)
}

pub fn fixtures(dir: &str) -> Vec<PathBuf> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(fixture_dir(dir)).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    paths
}

pub fn valid(name: &str) -> Vec<u8> {
    std::fs::read(fixture_dir("valid").join(format!("{name}.json"))).unwrap()
}

pub struct Run {
    pub code: Option<i32>,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the binary with `args`, feeding `stdin` when given.
pub fn xmhopf(args: &[&str], stdin: Option<&[u8]>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_xmhopf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Runs the binary on a shipped valid fixture.
pub fn on_fixture(name: &str, args: &[&str]) -> Run {
    let path = fixture_dir("valid").join(format!("{name}.json"));
    let mut all = vec!["--doc", path.to_str().unwrap()];
    all.extend_from_slice(args);
    xmhopf(&all, None)
}
