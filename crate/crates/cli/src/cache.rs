//! Append-only JSONL result cache.
//!
//! Each line is one [`CacheRecord`]. The key is the SHA-256 of the operation
//! name, the canonical model JSON, the characteristic, the box and the engine
//! version, so changing any of them misses the cache.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const ENGINE_VERSION: &str = concat!("stanley-", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: String,
    pub op: String,
    pub value: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<serde_json::Value>,
    pub engine: String,
}

/// The inputs that determine a cached result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheKey<'a> {
    pub op: &'a str,
    pub model: &'a str,
    pub characteristic: u32,
    pub corner: Option<&'a [u32]>,
    pub engine: &'a str,
}

impl CacheKey<'_> {
    pub fn digest(&self) -> String {
        let corner = match self.corner {
            Some(g) => g.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
            None => "default".to_string(),
        };
        let mut h = Sha256::new();
        // fields are separated by a byte that cannot occur in JSON text
        for part in [self.op, self.model, &self.characteristic.to_string(), &corner, self.engine] {
            h.update(part.as_bytes());
            h.update([0u8]);
        }
        hex::encode(h.finalize())
    }
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    records: HashMap<String, CacheRecord>,
}

impl Cache {
    /// Loads every record of `path`; a missing file is an empty cache.
    pub fn open(path: impl AsRef<Path>) -> anyhow::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut records = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (n, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let r: CacheRecord = serde_json::from_str(&line)
                    .map_err(|e| anyhow::anyhow!("{}:{}: {e}", path.display(), n + 1))?;
                records.insert(r.key.clone(), r);
            }
        }
        Ok(Cache { path, records })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&CacheRecord> {
        self.records.get(key)
    }

    pub fn append(&mut self, record: CacheRecord) -> anyhow::Result<()> {
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let mut line = serde_json::to_string(&record)?;
        line.push('\n');
        f.write_all(line.as_bytes())?;
        self.records.insert(record.key.clone(), record);
        Ok(())
    }

    /// Returns the cached record for `key`, or runs `compute` and stores it.
    /// The flag is true on a hit.
    pub fn get_or_compute<F>(&mut self, key: &CacheKey<'_>, compute: F) -> anyhow::Result<(CacheRecord, bool)>
    where
        F: FnOnce() -> anyhow::Result<(u64, Option<serde_json::Value>)>,
    {
        let digest = key.digest();
        if let Some(r) = self.records.get(&digest) {
            return Ok((r.clone(), true));
        }
        let (value, certificate) = compute()?;
        let record = CacheRecord {
            key: digest,
            op: key.op.to_string(),
            value,
            certificate,
            engine: key.engine.to_string(),
        };
        self.append(record.clone())?;
        Ok((record, false))
    }
}
