//! Content-addressed on-disk cache of computed shuffle elements.
//!
//! Each entry is a JSON file named by the SHA-256 of the operation, its canonical
//! parameters and [`VERSION_TAG`]. Files are written to a temporary file in the same
//! directory and renamed into place, so readers never see a partial entry.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use hallshuffle::ShuffleElement;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Bumped whenever a formula changes, so stale entries stop matching.
pub const VERSION_TAG: &str = concat!("hallshuffle-", env!("CARGO_PKG_VERSION"), "+formulas.1");

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: String,
    pub op: String,
    pub params: Vec<String>,
    #[serde(rename = "createdAt")]
    pub created_at: String,
    pub payload: serde_json::Value,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// `--cache-dir`, then `HALLSHUFFLE_CACHE`, then the platform cache directory.
    pub fn resolve(flag: Option<PathBuf>, disabled: bool) -> Self {
        if disabled {
            return Cache { dir: None };
        }
        let dir = flag
            .or_else(|| std::env::var_os("HALLSHUFFLE_CACHE").filter(|v| !v.is_empty()).map(PathBuf::from))
            .or_else(|| dirs::cache_dir().map(|d| d.join("hallshuffle")));
        Cache { dir }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(op: &str, params: &[String]) -> String {
        let mut h = Sha256::new();
        h.update(VERSION_TAG.as_bytes());
        h.update([0]);
        h.update(op.as_bytes());
        for p in params {
            h.update([0x1f]);
            h.update(p.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path(&self, op: &str, params: &[String]) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.json", Self::key(op, params))))
    }

    /// A cached value, or `None` on a miss or an unreadable entry.
    pub fn get(&self, op: &str, params: &[String]) -> Option<ShuffleElement> {
        let text = fs::read_to_string(self.path(op, params)?).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        if entry.version != VERSION_TAG || entry.op != op || entry.params != params {
            return None;
        }
        ShuffleElement::from_json(&entry.payload.to_string()).ok()
    }

    /// Publishes a value. Failures are reported on stderr and otherwise ignored.
    pub fn put(&self, op: &str, params: &[String], value: &ShuffleElement) {
        let Some(path) = self.path(op, params) else { return };
        if let Err(e) = self.write(&path, op, params, value) {
            eprintln!("warning: could not write cache entry {}: {e}", path.display());
        }
    }

    fn write(&self, path: &Path, op: &str, params: &[String], value: &ShuffleElement) -> std::io::Result<()> {
        let dir = path.parent().expect("entry has a parent");
        fs::create_dir_all(dir)?;
        let created_at = time::OffsetDateTime::now_utc().format(&time::format_description::well_known::Rfc3339).unwrap_or_default();
        let entry = CacheEntry {
            version: VERSION_TAG.into(),
            op: op.into(),
            params: params.to_vec(),
            created_at,
            payload: serde_json::from_str(&value.to_json()).map_err(std::io::Error::other)?,
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(serde_json::to_string(&entry).map_err(std::io::Error::other)?.as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }

    /// Entries for the current version tag, in file-name order.
    pub fn entries(&self) -> Vec<CacheEntry> {
        let Some(dir) = &self.dir else { return Vec::new() };
        let Ok(read) = fs::read_dir(dir) else { return Vec::new() };
        let mut paths: Vec<PathBuf> = read.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "json")).collect();
        paths.sort();
        paths.iter().filter_map(|p| serde_json::from_str::<CacheEntry>(&fs::read_to_string(p).ok()?).ok()).filter(|e| e.version == VERSION_TAG).collect()
    }
}
