//! Command-line front end: TOML input documents, the `check`, `build`,
//! `enumerate` and `schur` commands, and verification reports.

pub mod commands;
pub mod document;
pub mod report;
pub mod resolve;

use std::collections::BTreeMap;

pub use commands::{build, check, enumerate, schur, SchurCommand, CONSTRUCTIONS};
pub use document::Document;
pub use report::{Report, Verdict, SCHEMA_VERSION};

/// Anything that stops a command before it can produce verdicts. Maps to
/// exit status 2.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("usage: {0}")]
    Usage(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// `--params` as `key=value` pairs separated by commas. A bare value is
/// accepted for whichever single key a command asks for.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pairs: BTreeMap<String, String>,
    bare: Option<String>,
}

impl Params {
    pub fn parse(src: &str) -> Result<Self, InputError> {
        let mut out = Params::default();
        for part in src.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.split_once('=') {
                Some((k, v)) => {
                    if out.pairs.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                        return Err(InputError::Usage(format!("parameter `{}` given twice", k.trim())));
                    }
                }
                None if out.bare.is_none() => out.bare = Some(part.to_string()),
                None => return Err(InputError::Usage(format!("more than one bare parameter in `{src}`"))),
            }
        }
        Ok(out)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.pairs.get(key).map(String::as_str)
    }

    pub fn usize(&self, key: &str) -> Result<usize, InputError> {
        let raw = self
            .get(key)
            .or(self.bare.as_deref())
            .ok_or_else(|| InputError::Usage(format!("missing parameter `{key}` (use --params {key}=...)")))?;
        raw.parse()
            .map_err(|_| InputError::Usage(format!("parameter `{key}` must be a nonnegative integer, got `{raw}`")))
    }
}

/// Reads and parses a document from disk.
pub fn load(path: &std::path::Path) -> Result<Document, InputError> {
    let src = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Document::parse(&src)
}
