//! Built-in examples as `.hgx` sources, their expected results, and a
//! dense structure-constant oracle for the finite-dimensional ones.

use std::path::{Path, PathBuf};

use crate::cli::elaborate::{load_str, Env, HgxError};
use crate::hopfcore::Level;

mod expected;
mod oracle;

pub use expected::{expectations, run_expected, Expectation, Outcome, Provenance};
pub use oracle::{oracle_for, OracleError, StructureConstants};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CorpusError {
    #[error("unknown corpus entry `{0}`")]
    Unknown(String),
    #[error("corpus entry `{0}` does not load: {1}")]
    Load(String, HgxError),
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub source: &'static str,
    /// The strongest structure the entry declares.
    pub level: Level,
}

impl CorpusEntry {
    pub fn load(&self) -> Result<Env, CorpusError> {
        load_str(self.source, None).map_err(|e| CorpusError::Load(self.name.into(), e))
    }

    pub fn file_name(&self) -> String {
        format!("{}.hgx", self.name)
    }
}

macro_rules! entry {
    ($name:literal, $level:ident) => {
        CorpusEntry {
            name: $name,
            source: include_str!(concat!("../../corpus/", $name, ".hgx")),
            level: Level::$level,
        }
    };
}

static ENTRIES: &[CorpusEntry] = &[
    entry!("binomial", Hopf),
    entry!("fs3", Hopf),
    entry!("fx", Bialgebra),
    entry!("fz2", Hopf),
    entry!("fz3", Hopf),
    entry!("gl2", Hopf),
    entry!("gl2-over-t", Hopf),
    entry!("glq2", Hopf),
    entry!("glq2-over-t", Hopf),
    entry!("graded-z2", Hopf),
    entry!("graded-z3", Hopf),
    entry!("laurent", Hopf),
    entry!("os3", Hopf),
    entry!("oxg", Hopf),
    entry!("oz2", Hopf),
    entry!("oz3", Hopf),
    entry!("pair-s3", Hopf),
    entry!("pair-z2", Hopf),
    entry!("pair-z3", Hopf),
    entry!("plane-sl2", Hopf),
    entry!("quantum-plane", Hopf),
    entry!("sl2", Hopf),
    entry!("slq2", Hopf),
    entry!("sweedler-h4", Hopf),
    entry!("taft-h4prime", Hopf),
    entry!("taft-subgroup", Hopf),
    entry!("tensor-extension", Hopf),
    entry!("trig-coalgebra", Coalgebra),
    entry!("trunc-poly-z3", Hopf),
    entry!("u-sl2", Hopf),
    entry!("uq-sl2", Hopf),
];

/// All entries, sorted by name.
pub fn entries() -> &'static [CorpusEntry] {
    ENTRIES
}

pub fn entry(name: &str) -> Result<&'static CorpusEntry, CorpusError> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| CorpusError::Unknown(name.into()))
}

pub fn load(name: &str) -> Result<Env, CorpusError> {
    entry(name)?.load()
}

/// Writes every entry as `<name>.hgx` under `dir`.
pub fn export(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut out = Vec::new();
    for e in ENTRIES {
        let p = dir.join(e.file_name());
        std::fs::write(&p, e.source)?;
        out.push(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
