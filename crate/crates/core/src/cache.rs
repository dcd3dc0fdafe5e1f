//! Cache of skein values shared between engines, optionally persisted.
//!
//! The on-disk format is append-only text, one record per line:
//! `<R|D> <hex canonical code> <json polynomial>`. Loading skips lines that
//! do not parse (e.g. a record cut short by an interrupted write). Several
//! writers may append the same record; duplicates are harmless.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use dashmap::DashMap;
use parking_lot::Mutex;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::skein::Poly;

/// Environment variable naming the default persistent cache file.
pub const CACHE_ENV: &str = "BENNEQUIN_CACHE";

pub struct SharedCache {
    map: DashMap<(Poly, Vec<u8>), LaurentPoly>,
    file: Option<(PathBuf, Mutex<File>)>,
}

impl SharedCache {
    pub fn in_memory() -> Self {
        Self {
            map: DashMap::new(),
            file: None,
        }
    }

    /// Opens (creating if needed) a persistent cache and loads its records.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let io_err = |source| Error::Io {
            path: path.clone(),
            source,
        };
        let map = DashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path).map_err(io_err)?);
            for line in reader.lines() {
                let line = line.map_err(io_err)?;
                if let Some((key, value)) = parse_record(&line) {
                    map.insert(key, value);
                }
            }
        }
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&path)
            .map_err(io_err)?;
        Ok(Self {
            map,
            file: Some((path, Mutex::new(file))),
        })
    }

    /// Opens the cache named by [`CACHE_ENV`], if set.
    pub fn from_env() -> Result<Option<Self>> {
        match std::env::var_os(CACHE_ENV) {
            Some(p) if !p.is_empty() => Self::open(PathBuf::from(p)).map(Some),
            _ => Ok(None),
        }
    }

    pub fn path(&self) -> Option<&Path> {
        self.file.as_ref().map(|(p, _)| p.as_path())
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, which: Poly, code: &[u8]) -> Option<LaurentPoly> {
        self.map.get(&(which, code.to_vec())).map(|v| v.clone())
    }

    pub fn insert(&self, which: Poly, code: &[u8], value: &LaurentPoly) {
        let fresh = self
            .map
            .insert((which, code.to_vec()), value.clone())
            .is_none();
        if let (true, Some((_, file))) = (fresh, &self.file) {
            let line = format!(
                "{} {} {}\n",
                which.tag(),
                hex_encode(code),
                serde_json::to_string(value).expect("polynomials serialize")
            );
            // a failed append only loses a cache entry
            let _ = file.lock().write_all(line.as_bytes());
        }
    }
}

fn parse_record(line: &str) -> Option<((Poly, Vec<u8>), LaurentPoly)> {
    let mut parts = line.splitn(3, ' ');
    let which = match parts.next()? {
        "R" => Poly::Homfly,
        "D" => Poly::Kauffman,
        _ => return None,
    };
    let code = hex_decode(parts.next()?)?;
    let value: LaurentPoly = serde_json::from_str(parts.next()?).ok()?;
    Some(((which, code), value))
}

fn hex_encode(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn hex_decode(s: &str) -> Option<Vec<u8>> {
    if !s.len().is_multiple_of(2) {
        return None;
    }
    (0..s.len())
        .step_by(2)
        .map(|i| u8::from_str_radix(&s[i..i + 2], 16).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_survive_reopen() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.txt");
        let v = LaurentPoly::homfly_circle();
        {
            let c = SharedCache::open(&path).unwrap();
            c.insert(Poly::Homfly, &[1, 2, 255], &v);
            c.insert(Poly::Homfly, &[1, 2, 255], &v);
        }
        let mut text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 1);
        text.push_str("D 0a [{\"ez\":0");
        std::fs::write(&path, text).unwrap();
        let c = SharedCache::open(&path).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.get(Poly::Homfly, &[1, 2, 255]), Some(v));
        assert_eq!(c.get(Poly::Kauffman, &[1, 2, 255]), None);
    }
}
