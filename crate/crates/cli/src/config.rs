//! Experiment settings from a TOML file, overridden by flags.

use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Jsonl,
}

/// Every setting a command may read. All fields are optional so a file can
/// set only what it needs.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub family: Option<String>,
    pub length: Option<usize>,
    pub k: Option<u32>,
    pub j: Option<usize>,
    pub strict: Option<bool>,
    pub alpha: Option<usize>,
    pub max_d: Option<usize>,
    pub max_v: Option<usize>,
    pub n_slack: Option<usize>,
    pub max_len: Option<usize>,
    pub random_count: Option<usize>,
    pub random_len: Option<usize>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> anyhow::Result<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).map_err(|e| usage(format!("config {}: {e}", path.display())))
    }
}

/// A bad flag or config value, reported with exit status 1.
#[derive(Debug)]
pub struct Usage(pub String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// `flag`, else `file`, else an error naming the missing setting.
pub fn required<T>(flag: Option<T>, file: Option<T>, name: &str) -> anyhow::Result<T> {
    flag.or(file)
        .ok_or_else(|| usage(format!("missing --{name} (flag or config)")))
}

pub fn positive(value: usize, name: &str) -> anyhow::Result<usize> {
    if value == 0 {
        return Err(usage(format!("--{name} must be positive")));
    }
    Ok(value)
}
