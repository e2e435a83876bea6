//! Reading and writing the two file formats.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use hypergirth::format::{parse_bipartite, parse_hypergraph, sniff, write_bipartite, write_hypergraph, FileKind};
use hypergirth::{BipartiteGraph, Hypergraph};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Artifact {
    Hyper(Hypergraph),
    Bip(BipartiteGraph),
}

impl Artifact {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match sniff(text) {
            Some(FileKind::Hypergraph) => Ok(Artifact::Hyper(parse_hypergraph(text)?)),
            Some(FileKind::Bipartite) => Ok(Artifact::Bip(parse_bipartite(text)?)),
            None => Err(CliError::Parse(
                "line 1: expected `hgt 1` or `bgt 1` header".into(),
            )),
        }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = read_text(path)?;
        Artifact::parse(&text).map_err(|e| e.context(&path.display().to_string()))
    }

    pub fn serialize(&self) -> String {
        match self {
            Artifact::Hyper(h) => write_hypergraph(h),
            Artifact::Bip(g) => write_bipartite(g),
        }
    }

    pub fn extension(&self) -> &'static str {
        match self {
            Artifact::Hyper(_) => "hgt",
            Artifact::Bip(_) => "bgt",
        }
    }

    pub fn expect_hyper(self, what: &str) -> Result<Hypergraph, CliError> {
        match self {
            Artifact::Hyper(h) => Ok(h),
            Artifact::Bip(_) => Err(CliError::Precondition(format!(
                "{what} needs a hypergraph (hgt) input, got a bipartite graph"
            ))),
        }
    }

    pub fn expect_bip(self, what: &str) -> Result<BipartiteGraph, CliError> {
        match self {
            Artifact::Bip(g) => Ok(g),
            Artifact::Hyper(_) => Err(CliError::Precondition(format!(
                "{what} needs a bipartite (bgt) input, got a hypergraph"
            ))),
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Writes through a freshly created sibling file, then renames it over
/// `path`, so readers never see a partial file and concurrent writers never
/// share a handle.
pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    let tmp = temp_sibling(path);
    let result = OpenOptions::new()
        .write(true)
        .create_new(true)
        .open(&tmp)
        .and_then(|mut f| {
            f.write_all(text.as_bytes())?;
            f.sync_all()
        })
        .and_then(|()| fs::rename(&tmp, path));
    if let Err(e) = result {
        let _ = fs::remove_file(&tmp);
        return Err(CliError::io(path, e));
    }
    Ok(())
}

fn temp_sibling(path: &Path) -> PathBuf {
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!(".{name}.{}.tmp", std::process::id()))
}

/// Writes to `path`, or to stdout when `path` is `None` or `-`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) if p != Path::new("-") => write_text(p, text),
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|e| CliError::io(Path::new("<stdout>"), e))
        }
    }
}
