//! Locating input files: an existing path, then `$QF_ASSETS`, then the
//! assets compiled into the library.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use qf_core::{assets, Error, Result};

pub const ASSETS_ENV: &str = "QF_ASSETS";

/// Where an input was found.
#[derive(Debug, Clone)]
pub enum Source {
    File(PathBuf),
    Bundled(String),
}

impl Source {
    /// Directory that relative references inside the input resolve against.
    pub fn dir(&self) -> Option<&Path> {
        match self {
            Source::File(p) => p.parent(),
            Source::Bundled(_) => None,
        }
    }
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Source::File(p) => write!(f, "{}", p.display()),
            Source::Bundled(name) => write!(f, "bundled:{name}"),
        }
    }
}

fn candidates(dir: &Path, name: &str) -> [PathBuf; 2] {
    [dir.join(name), dir.join(format!("{name}.json"))]
}

fn read(path: &Path) -> Result<(String, Source)> {
    Ok((fs::read_to_string(path)?, Source::File(path.to_path_buf())))
}

/// Reads `name`, trying `base` (if given) before the global search order.
pub fn load_from(base: Option<&Path>, name: &str) -> Result<(String, Source)> {
    if let Some(dir) = base {
        for p in candidates(dir, name) {
            if p.is_file() {
                return read(&p);
            }
        }
    }
    load(name)
}

pub fn load(name: &str) -> Result<(String, Source)> {
    let direct = Path::new(name);
    if direct.is_file() {
        return read(direct);
    }
    if let Some(dir) = env::var_os(ASSETS_ENV) {
        let dir = PathBuf::from(dir);
        let file_name = Path::new(name).file_name().map(Path::new).unwrap_or(direct);
        for p in candidates(&dir, &file_name.to_string_lossy()) {
            if p.is_file() {
                return read(&p);
            }
        }
    }
    if let Some(text) = assets::bundled(name) {
        return Ok((text.to_string(), Source::Bundled(name.to_string())));
    }
    Err(Error::Io(std::io::Error::new(
        std::io::ErrorKind::NotFound,
        format!("{name}: no such file, and no asset of that name"),
    )))
}
