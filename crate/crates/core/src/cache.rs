//! Content-addressed on-disk cache for class lists and character tables.
//!
//! The key is the SHA-256 of a canonical description string (group spec +
//! operation + parameters); the value is the serialized JSON payload. The
//! cache directory comes from the `CHARLEVEL_CACHE` environment variable and
//! defaults to `./.charlevel-cache`. A missing or unwritable directory
//! degrades to cache-off behaviour rather than failing the computation.

use sha2::{Digest, Sha256};
use std::fs;
use std::path::PathBuf;

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// Resolve the cache directory: explicit override, else `CHARLEVEL_CACHE`,
    /// else `./.charlevel-cache`.
    pub fn resolve(explicit: Option<PathBuf>) -> Cache {
        let dir = explicit
            .or_else(|| std::env::var_os("CHARLEVEL_CACHE").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(".charlevel-cache"));
        Cache { dir: Some(dir) }
    }

    /// A cache that never stores anything.
    pub fn disabled() -> Cache {
        Cache { dir: None }
    }

    pub fn key(description: &str) -> String {
        let mut hasher = Sha256::new();
        hasher.update(description.as_bytes());
        hex_string(&hasher.finalize())
    }

    pub fn get(&self, description: &str) -> Option<String> {
        let dir = self.dir.as_ref()?;
        let path = dir.join(format!("{}.json", Self::key(description)));
        fs::read_to_string(path).ok()
    }

    pub fn put(&self, description: &str, payload: &str) {
        let Some(dir) = self.dir.as_ref() else {
            return;
        };
        if fs::create_dir_all(dir).is_err() {
            return;
        }
        let path = dir.join(format!("{}.json", Self::key(description)));
        let tmp = dir.join(format!(".{}.tmp", Self::key(description)));
        if fs::write(&tmp, payload).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
}

fn hex_string(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        s.push_str(&format!("{:02x}", b));
    }
    s
}
