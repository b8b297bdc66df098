//! On-disk cache of computed series.
//!
//! One JSON file per key. The file holds the series document
//! (`var`, `trunc`, `coeffs`) followed by metadata fields that must match
//! the key on load.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::qseries::TruncatedSeries;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "COMLIE_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheKey {
    /// `u`, `su` or `sp`.
    pub family: String,
    /// `0` for quantities that do not depend on the rank.
    pub rank: usize,
    pub quantity: String,
    pub trunc: usize,
    /// `enum` or `oracle`.
    pub route: String,
}

impl CacheKey {
    pub fn file_name(&self) -> String {
        format!(
            "{}{}-{}-{}-d{}-v{}.json",
            self.family, self.rank, self.quantity, self.route, self.trunc, VERSION
        )
    }

    fn metadata(&self) -> [(&'static str, Value); 6] {
        [
            ("family", Value::from(self.family.clone())),
            ("rank", Value::from(self.rank)),
            ("quantity", Value::from(self.quantity.clone())),
            ("route", Value::from(self.route.clone())),
            ("trunc_key", Value::from(self.trunc)),
            ("version", Value::from(VERSION)),
        ]
    }

    /// The series document with this key's metadata appended.
    pub fn document(&self, series: &TruncatedSeries) -> Value {
        let Value::Object(mut doc) = series.to_json() else {
            unreachable!("series documents are objects")
        };
        for (k, v) in self.metadata() {
            doc.insert(k.to_string(), v);
        }
        Value::Object(doc)
    }

    fn matches(&self, doc: &Map<String, Value>) -> bool {
        self.metadata()
            .iter()
            .all(|(k, v)| doc.get(*k) == Some(v))
    }
}

#[derive(Clone, Debug)]
pub struct SeriesCache {
    dir: PathBuf,
}

impl SeriesCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        SeriesCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// `Ok(None)` when there is no entry; an error when the entry exists but
    /// is unreadable or belongs to another key.
    pub fn load(&self, key: &CacheKey) -> Result<Option<TruncatedSeries>> {
        let path = self.path(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let doc: Value = serde_json::from_str(&text)?;
        let obj = doc
            .as_object()
            .ok_or_else(|| Error::Format(format!("{} is not an object", path.display())))?;
        if !key.matches(obj) {
            return Err(Error::Format(format!(
                "{} does not match its cache key",
                path.display()
            )));
        }
        let series = TruncatedSeries::from_json(&doc)?;
        if series.trunc() != key.trunc {
            return Err(Error::Format(format!(
                "{} holds a series through t^{}",
                path.display(),
                series.trunc()
            )));
        }
        Ok(Some(series))
    }

    /// Writes through a temporary file so readers never see a partial entry.
    pub fn store(&self, key: &CacheKey, series: &TruncatedSeries) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(key);
        let tmp = self.dir.join(format!(".{}.{}.tmp", key.file_name(), std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            serde_json::to_writer(&mut f, &key.document(series))?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(trunc: usize) -> CacheKey {
        CacheKey {
            family: "su".into(),
            rank: 2,
            quantity: "bcom".into(),
            trunc,
            route: "enum".into(),
        }
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SeriesCache::new(dir.path());
        let s = TruncatedSeries::from_coeffs((0..5).map(num_bigint::BigInt::from).collect()).unwrap();
        assert!(cache.load(&key(4)).unwrap().is_none());
        cache.store(&key(4), &s).unwrap();
        assert_eq!(cache.load(&key(4)).unwrap(), Some(s));
        assert!(cache.load(&key(5)).unwrap().is_none());
    }

    #[test]
    fn mismatched_entry_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SeriesCache::new(dir.path());
        let s = TruncatedSeries::one(4);
        cache.store(&key(4), &s).unwrap();
        let other = CacheKey {
            rank: 3,
            ..key(4)
        };
        fs::copy(cache.path(&key(4)), cache.path(&other)).unwrap();
        assert!(cache.load(&other).is_err());
    }
}
