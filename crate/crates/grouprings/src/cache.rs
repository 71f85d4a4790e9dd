//! On-disk result cache with atomic writes.
//!
//! Entries are keyed by artifact version, group fingerprint, command and arguments. A stored
//! entry whose fingerprint disagrees with the live group is treated as corrupt and recomputed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::report::{hex, ARTIFACT_VERSION};

pub const CACHE_ENV: &str = "GROUPRINGS_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    artifact_version: String,
    fingerprint: String,
    command: String,
    args: String,
    payload: String,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

/// Outcome of a lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lookup {
    Hit(String),
    Miss,
    /// An entry existed but did not match; it will be overwritten.
    Corrupt,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `GROUPRINGS_CACHE_DIR`, else `$XDG_CACHE_HOME/grouprings`, else `$HOME/.cache/grouprings`.
    pub fn from_env() -> Option<Self> {
        let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
        var(CACHE_ENV)
            .or_else(|| var("XDG_CACHE_HOME").map(|d| d.join("grouprings")))
            .or_else(|| var("HOME").map(|d| d.join(".cache").join("grouprings")))
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(fingerprint: &str, command: &str, args: &str) -> String {
        let mut h = Sha256::new();
        for part in [ARTIFACT_VERSION, fingerprint, command, args] {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part.as_bytes());
        }
        hex(&h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, fingerprint: &str, command: &str, args: &str) -> Lookup {
        let Ok(bytes) = fs::read(self.path(&Self::key(fingerprint, command, args))) else {
            return Lookup::Miss;
        };
        match serde_json::from_slice::<Entry>(&bytes) {
            Ok(e)
                if e.artifact_version == ARTIFACT_VERSION
                    && e.fingerprint == fingerprint
                    && e.command == command
                    && e.args == args
                    && payload_fingerprint(&e.payload).as_deref() == Some(fingerprint) =>
            {
                Lookup::Hit(e.payload)
            }
            _ => Lookup::Corrupt,
        }
    }

    /// Writes to a temporary file in the cache directory, then renames it into place.
    pub fn put(&self, fingerprint: &str, command: &str, args: &str, payload: &str) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            artifact_version: ARTIFACT_VERSION.into(),
            fingerprint: fingerprint.into(),
            command: command.into(),
            args: args.into(),
            payload: payload.into(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(&serde_json::to_vec(&entry)?)?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(&Self::key(fingerprint, command, args))).map_err(|e| e.error)?;
        Ok(())
    }
}

fn payload_fingerprint(payload: &str) -> Option<String> {
    let v: serde_json::Value = serde_json::from_str(payload).ok()?;
    v.get("group")?.get("fingerprint")?.as_str().map(str::to_string)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn payload(fp: &str) -> String {
        format!("{{\"group\":{{\"fingerprint\":\"{fp}\"}},\"x\":1}}")
    }

    #[test]
    fn round_trip_and_key_separation() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path());
        assert_eq!(c.get("f", "nd", ""), Lookup::Miss);
        c.put("f", "nd", "", &payload("f")).unwrap();
        assert_eq!(c.get("f", "nd", ""), Lookup::Hit(payload("f")));
        assert_eq!(c.get("f", "dk", ""), Lookup::Miss);
        assert_eq!(c.get("f", "nd", "seed=1"), Lookup::Miss);
        assert_ne!(Cache::key("ab", "c", ""), Cache::key("a", "bc", ""));
    }

    #[test]
    fn corrupt_entries_are_detected() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path());
        c.put("f", "nd", "", &payload("other")).unwrap();
        assert_eq!(c.get("f", "nd", ""), Lookup::Corrupt);
        fs::write(c.path(&Cache::key("f", "nd", "")), b"{not json").unwrap();
        assert_eq!(c.get("f", "nd", ""), Lookup::Corrupt);
        c.put("f", "nd", "", &payload("f")).unwrap();
        assert_eq!(c.get("f", "nd", ""), Lookup::Hit(payload("f")));
    }
}
