use std::io::Write;
use std::path::{Path, PathBuf};

use ncs_core::format::{read_record, write_record};
use ncs_core::platform::parse_platform;
use ncs_core::protocols::files::read_ccs_params;
use ncs_core::protocols::ccs::CcsParams;
use ncs_core::protocols::PlatformSpec;
use ncs_core::GroupHandle;
use tempfile::NamedTempFile;

use crate::failure::Failure;

pub const MESSAGE_HEADER: &str = "message v1";

pub fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read `{}`: {e}", path.display())))
}

/// Staged output: nothing becomes visible until [`Staged::commit`], and
/// then every file appears by rename.
#[derive(Default)]
pub struct Staged {
    files: Vec<(NamedTempFile, PathBuf)>,
}

impl Staged {
    pub fn add(&mut self, path: &Path, contents: &str) -> Result<(), Failure> {
        let io = |e: std::io::Error| Failure::Io(format!("cannot write `{}`: {e}", path.display()));
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let mut tmp = NamedTempFile::new_in(dir).map_err(io)?;
        tmp.write_all(contents.as_bytes()).map_err(io)?;
        tmp.as_file().sync_all().map_err(io)?;
        self.files.push((tmp, path.to_path_buf()));
        Ok(())
    }

    pub fn commit(self) -> Result<(), Failure> {
        for (tmp, path) in self.files {
            tmp.persist(&path)
                .map_err(|e| Failure::Io(format!("cannot write `{}`: {}", path.display(), e.error)))?;
        }
        Ok(())
    }
}

pub fn write_one(path: &Path, contents: &str) -> Result<(), Failure> {
    let mut staged = Staged::default();
    staged.add(path, contents)?;
    staged.commit()
}

pub fn load_platform(path: &Path) -> Result<PlatformSpec<GroupHandle>, Failure> {
    let text = read(path)?;
    Ok(parse_platform(&text, path.parent())?)
}

pub fn load_ccs_params(path: &Path) -> Result<CcsParams, Failure> {
    Ok(read_ccs_params(&read(path)?)?)
}

/// A message file: `message v1` and one line holding the message.
pub fn read_message(path: &Path) -> Result<String, Failure> {
    let text = read(path)?;
    Ok(read_record(&text, MESSAGE_HEADER, 1)?[0].to_string())
}

pub fn write_message(line: &str) -> String {
    write_record(MESSAGE_HEADER, [line])
}

pub fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}
