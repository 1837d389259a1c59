#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const BIN: &str = env!("CARGO_BIN_EXE_ncs");

pub fn platforms_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../platforms")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// A scratch directory holding a copy of the shipped platform files under
/// `platforms/`, so every invocation can use relative paths.
pub fn workspace() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("platforms");
    fs::create_dir(&dest).unwrap();
    for entry in fs::read_dir(platforms_dir()).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), dest.join(entry.file_name())).unwrap();
    }
    dir
}

pub fn ncs(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .current_dir(dir)
        .env("RUST_LOG", "off")
        .output()
        .unwrap()
}

/// One scripted invocation: name, arguments, files it writes.
pub struct Step {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub files: &'static [&'static str],
}

pub const SCRIPT: &[Step] = &[
    Step {
        name: "keygen-ncs",
        args: &["keygen", "--scheme", "ncs", "--platform", "platforms/d4xd4.platform", "--seed", "3", "--out", "ncs"],
        files: &["ncs.pub", "ncs.sec"],
    },
    Step {
        name: "encrypt-ncs",
        args: &["encrypt", "--scheme", "ncs", "--platform", "platforms/d4xd4.platform", "--seed", "2", "--key", "ncs.pub", "--message", "g2*g3", "--out", "ncs.ct"],
        files: &["ncs.ct"],
    },
    Step {
        name: "decrypt-ncs",
        args: &["decrypt", "--scheme", "ncs", "--platform", "platforms/d4xd4.platform", "--key", "ncs.sec", "--in", "ncs.ct", "--out", "ncs.msg"],
        files: &["ncs.msg"],
    },
    Step {
        name: "keygen-kk06",
        args: &["keygen", "--scheme", "kk06", "--platform", "platforms/anosov.platform", "--seed", "3", "--out", "kk06"],
        files: &["kk06.pub", "kk06.sec"],
    },
    Step {
        name: "encrypt-kk06",
        args: &["encrypt", "--scheme", "kk06", "--platform", "platforms/anosov.platform", "--seed", "4", "--key", "kk06.pub", "--message", "g1*g3^-2", "--out", "kk06.ct"],
        files: &["kk06.ct"],
    },
    Step {
        name: "decrypt-kk06",
        args: &["decrypt", "--scheme", "kk06", "--platform", "platforms/anosov.platform", "--key", "kk06.sec", "--in", "kk06.ct", "--out", "kk06.msg"],
        files: &["kk06.msg"],
    },
    Step {
        name: "keygen-pcke",
        args: &["keygen", "--scheme", "pcke", "--platform", "platforms/d4xd4.platform", "--seed", "5", "--element", "g2*g4", "--n", "3", "--out", "pcke"],
        files: &["pcke.pub", "pcke.sec"],
    },
    Step {
        name: "encrypt-pcke",
        args: &["encrypt", "--scheme", "pcke", "--platform", "platforms/d4xd4.platform", "--seed", "6", "--key", "pcke.pub", "--message", "g1*g4", "--m", "1", "--out", "pcke.ct"],
        files: &["pcke.ct"],
    },
    Step {
        name: "decrypt-pcke",
        args: &["decrypt", "--scheme", "pcke", "--platform", "platforms/d4xd4.platform", "--key", "pcke.sec", "--in", "pcke.ct", "--out", "pcke.msg"],
        files: &["pcke.msg"],
    },
    Step {
        name: "keygen-ccs",
        args: &["keygen", "--scheme", "ccs", "--platform", "platforms/desk.ccs", "--seed", "7", "--out", "ccs"],
        files: &["ccs.pub", "ccs.sec"],
    },
    Step {
        name: "encrypt-ccs",
        args: &["encrypt", "--scheme", "ccs", "--platform", "platforms/desk.ccs", "--seed", "8", "--key", "ccs.pub", "--message", "4", "--out", "ccs.ct"],
        files: &["ccs.ct"],
    },
    Step {
        name: "decrypt-ccs",
        args: &["decrypt", "--scheme", "ccs", "--platform", "platforms/desk.ccs", "--key", "ccs.sec", "--in", "ccs.ct", "--out", "ccs.msg"],
        files: &["ccs.msg"],
    },
    Step {
        name: "exchange-kk06",
        args: &["exchange", "--scheme", "kk06", "--platform", "platforms/d4xd4.platform", "--seed", "9", "--out", "kk06.exchange"],
        files: &["kk06.exchange"],
    },
    Step {
        name: "exchange-pcke",
        args: &["exchange", "--scheme", "pcke", "--platform", "platforms/d4xd4.platform", "--seed", "10", "--element", "g2*g4", "--n", "3", "--m", "1", "--out", "pcke.exchange"],
        files: &["pcke.exchange"],
    },
    Step {
        name: "attack-kk06",
        args: &["attack", "--scheme", "kk06", "--platform", "platforms/anosov.platform", "--key", "kk06.pub", "--out", "attack-kk06.txt"],
        files: &["attack-kk06.txt"],
    },
    Step {
        name: "attack-kk06-short",
        args: &["attack", "--scheme", "kk06", "--platform", "platforms/anosov.platform", "--key", "kk06.pub", "--budget-len", "4", "--out", "attack-kk06-short.txt"],
        files: &["attack-kk06-short.txt"],
    },
    Step {
        name: "attack-ncs",
        args: &["attack", "--scheme", "ncs", "--platform", "platforms/d4xd4.platform", "--key", "ncs.pub", "--out", "attack-ncs.txt"],
        files: &["attack-ncs.txt"],
    },
    Step {
        name: "attack-pcke",
        args: &["attack", "--scheme", "pcke", "--platform", "platforms/d4xd4.platform", "--key", "pcke.pub", "--out", "attack-pcke.txt"],
        files: &["attack-pcke.txt"],
    },
    Step {
        name: "attack-ccs",
        args: &["attack", "--scheme", "ccs", "--platform", "platforms/desk.ccs", "--key", "ccs.pub", "--out", "attack-ccs.txt"],
        files: &["attack-ccs.txt"],
    },
    Step {
        name: "growth-anosov",
        args: &["growth", "--platform", "platforms/anosov.platform", "--radius", "6", "--out", "growth-anosov.txt"],
        files: &["growth-anosov.txt"],
    },
    Step {
        name: "growth-d4",
        args: &["growth", "--platform", "platforms/d4.platform", "--radius", "10", "--out", "growth-d4.txt"],
        files: &["growth-d4.txt"],
    },
    Step {
        name: "bench-conj",
        args: &["bench", "--platform", "platforms/anosov.platform", "--seed", "11", "--op", "conj", "--trials", "200", "--out", "bench.txt"],
        files: &["bench.txt"],
    },
];

/// Runs the script in a fresh workspace and renders each step as a
/// transcript: the command line, exit code, stdout and every written file.
pub fn run_script() -> Vec<(String, String)> {
    let dir = workspace();
    SCRIPT
        .iter()
        .map(|step| {
            let out = ncs(dir.path(), step.args);
            let mut text = format!("$ ncs {}\n", step.args.join(" "));
            text += &format!("exit {}\n", out.status.code().unwrap_or(-1));
            text += "--- stdout\n";
            text += &String::from_utf8(out.stdout).unwrap();
            for f in step.files {
                text += &format!("--- file {f}\n");
                text += &fs::read_to_string(dir.path().join(f)).unwrap_or_else(|_| "<missing>\n".into());
            }
            (step.name.to_string(), text)
        })
        .collect()
}

/// Compares a run against `tests/golden/<step>.txt`, or rewrites the golden
/// files when `UPDATE_GOLDEN` is set. Returns the names of mismatched steps.
pub fn check_golden(run: &[(String, String)]) -> Vec<String> {
    let dir = golden_dir();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(&dir).unwrap();
        for (name, text) in run {
            fs::write(dir.join(format!("{name}.txt")), text).unwrap();
        }
    }
    run.iter()
        .filter(|(name, text)| fs::read_to_string(dir.join(format!("{name}.txt"))).ok().as_deref() != Some(text.as_str()))
        .map(|(name, _)| name.clone())
        .collect()
}

/// Extracts the body of `--- file <name>` from a transcript.
pub fn section<'a>(transcript: &'a str, header: &str) -> &'a str {
    let marker = format!("--- {header}\n");
    let start = transcript.find(&marker).map(|i| i + marker.len()).unwrap_or(transcript.len());
    let rest = &transcript[start..];
    let end = rest.find("\n--- ").map(|i| i + 1).unwrap_or(rest.len());
    &rest[..end]
}
