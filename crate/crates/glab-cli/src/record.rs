//! Run records: what ran, with which config hash, producing which bytes.
//!
//! Timestamps make `run.json` itself non-reproducible, but the data-file
//! digests inside it must be identical across re-runs of the same config
//! and version.

use std::fs;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::digest::fnv1a64_hex;
use crate::error::CliResult;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FileDigest {
    pub name: String,
    pub bytes: u64,
    pub fnv64: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRecord {
    pub config_hash: String,
    pub version: String,
    pub experiment: String,
    pub workers: usize,
    pub started_unix_ms: u64,
    pub finished_unix_ms: u64,
    pub files: Vec<FileDigest>,
    pub summary: serde_json::Value,
}

pub fn now_unix_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

/// Write `name` under `dir` and return its digest entry.
pub fn write_data_file(dir: &Path, name: &str, contents: &str) -> CliResult<FileDigest> {
    let path = dir.join(name);
    fs::write(&path, contents)?;
    Ok(FileDigest {
        name: name.to_string(),
        bytes: contents.len() as u64,
        fnv64: fnv1a64_hex(contents.as_bytes()),
    })
}
