//! Append-only results cache: one JSON record per line in a single file
//! under a configurable directory (`SGP_CACHE_DIR`, default `.sgp-cache`).
//! Lookups hit only on an exact (hash, operation, params) match; corrupt
//! lines are skipped with a warning. Appends take an exclusive advisory
//! lock so concurrent invocations interleave whole lines.

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResultRecord {
    pub hash: String,
    pub operation: String,
    pub params: Value,
    pub value: Value,
    pub witness: Vec<u32>,
    pub timestamp_secs: u64,
    pub version: String,
}

pub fn cache_file() -> PathBuf {
    let dir = std::env::var_os("SGP_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".sgp-cache"));
    dir.join("results.jsonl")
}

pub fn lookup(hash: &str, operation: &str, params: &Value) -> Option<ResultRecord> {
    let file = File::open(cache_file()).ok()?;
    let mut hit = None;
    for (idx, lined) in BufReader::new(file).lines().enumerate() {
        let Ok(line) = lined else { break };
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<ResultRecord>(&line) {
            Ok(record) => {
                if record.hash == hash && record.operation == operation && &record.params == params
                {
                    hit = Some(record); // last write wins
                }
            }
            Err(err) => {
                eprintln!(
                    "warning: skipping corrupt cache line {} in {}: {err}",
                    idx + 1,
                    cache_file().display()
                );
            }
        }
    }
    hit
}

pub fn append(record: &ResultRecord) -> Result<()> {
    let path = cache_file();
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)
            .with_context(|| format!("creating cache directory {}", parent.display()))?;
    }
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(&path)
        .with_context(|| format!("opening cache file {}", path.display()))?;
    lock_exclusive(&file)?;
    let line = serde_json::to_string(record)?;
    let outcome = writeln!(file, "{line}").context("appending cache record");
    unlock(&file);
    outcome
}

#[cfg(unix)]
fn lock_exclusive(file: &File) -> Result<()> {
    use std::os::unix::io::AsRawFd;
    let rc = unsafe { libc::flock(file.as_raw_fd(), libc::LOCK_EX) };
    if rc != 0 {
        return Err(std::io::Error::last_os_error()).context("locking cache file");
    }
    Ok(())
}

#[cfg(unix)]
fn unlock(file: &File) {
    use std::os::unix::io::AsRawFd;
    unsafe { libc::flock(file.as_raw_fd(), libc::LOCK_UN) };
}

#[cfg(not(unix))]
fn lock_exclusive(_file: &File) -> Result<()> {
    Ok(())
}

#[cfg(not(unix))]
fn unlock(_file: &File) {}

pub fn now_secs() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}
