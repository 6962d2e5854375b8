//! On-disk oracle cache, content-addressed by a SHA-256 of the operation,
//! its parameters and the canonical JSON of the ideal.
//!
//! Layout: `<dir>/<op>/<first two hex digits>/<hash>.json`, one result per
//! file. Files are written to a temporary name and renamed into place, so
//! concurrent readers never see a partial entry.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

pub const CACHE_DIR_ENV: &str = "COMPEDGE_CACHE_DIR";

const KEY_VERSION: &str = "compedge-oracle-cache-v1";

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Clone, Debug, Default)]
pub struct OracleCache {
    dir: Option<PathBuf>,
}

impl OracleCache {
    pub fn disabled() -> Self {
        OracleCache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        OracleCache {
            dir: Some(dir.into()),
        }
    }

    /// Enabled iff `COMPEDGE_CACHE_DIR` is set and nonempty.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(d) if !d.is_empty() => Self::at(d),
            _ => Self::disabled(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(op: &str, params: &str, ideal: &MonomialIdeal) -> String {
        let canonical = serde_json::to_string(ideal).expect("ideal serializes");
        let mut h = Sha256::new();
        for part in [KEY_VERSION, op, params, &canonical] {
            h.update(part.as_bytes());
            h.update([0u8]);
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path(&self, op: &str, key: &str) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(op).join(&key[..2]).join(format!("{key}.json")))
    }

    /// Cached value if present and readable, else `compute()` stored on
    /// success. Unreadable entries are recomputed and overwritten.
    pub fn get_or_compute<T, F>(&self, op: &str, params: &str, ideal: &MonomialIdeal, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        let Some(path) = self.path(op, &Self::key(op, params, ideal)) else {
            return compute();
        };
        if let Ok(bytes) = fs::read(&path) {
            if let Ok(v) = serde_json::from_slice(&bytes) {
                return Ok(v);
            }
        }
        let value = compute()?;
        write_atomic(&path, &serde_json::to_vec(&value).map_err(|e| Error::Io(e.to_string()))?)?;
        Ok(value)
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let parent = path.parent().expect("cache path has a parent");
    fs::create_dir_all(parent)?;
    let tmp = parent.join(format!(
        ".tmp-{}-{}",
        std::process::id(),
        TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)?;
    Ok(())
}
