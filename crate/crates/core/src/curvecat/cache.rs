use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::CurveError;

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
struct Entry {
    curve: String,
    m: u32,
    count: u64,
}

/// Point counts on disk, one small JSON file per `(curve id, m)`.
#[derive(Clone, Debug)]
pub struct CountCache {
    dir: PathBuf,
}

impl CountCache {
    pub fn new(dir: impl Into<PathBuf>) -> CountCache {
        CountCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, curve: &str, m: u32) -> PathBuf {
        let safe: String = curve.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect();
        self.dir.join(format!("count_{safe}_m{m}.json"))
    }

    pub fn get(&self, curve: &str, m: u32) -> Result<Option<u64>, CurveError> {
        let path = self.path(curve, m);
        if !path.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&path).map_err(|e| CurveError::Cache(format!("{}: {e}", path.display())))?;
        let entry: Entry = serde_json::from_str(&text).map_err(|e| CurveError::Cache(format!("{}: {e}", path.display())))?;
        if entry.curve != curve || entry.m != m {
            return Err(CurveError::Cache(format!("{} holds data for another key", path.display())));
        }
        Ok(Some(entry.count))
    }

    pub fn put(&self, curve: &str, m: u32, count: u64) -> Result<(), CurveError> {
        fs::create_dir_all(&self.dir).map_err(|e| CurveError::Cache(e.to_string()))?;
        let entry = Entry { curve: curve.to_string(), m, count };
        let path = self.path(curve, m);
        fs::write(&path, serde_json::to_string(&entry).unwrap()).map_err(|e| CurveError::Cache(format!("{}: {e}", path.display())))
    }

    /// Cached value, or `compute` stored for next time. With `validate`, a
    /// cached value is recomputed and a mismatch is an error.
    pub fn get_or_compute(
        &self,
        curve: &str,
        m: u32,
        validate: bool,
        compute: impl FnOnce() -> Result<u64, CurveError>,
    ) -> Result<(u64, bool), CurveError> {
        match self.get(curve, m)? {
            Some(v) if !validate => Ok((v, true)),
            Some(v) => {
                let fresh = compute()?;
                if fresh != v {
                    return Err(CurveError::Cache(format!("stale entry for {curve} m={m}: cached {v}, recomputed {fresh}")));
                }
                Ok((v, true))
            }
            None => {
                let fresh = compute()?;
                self.put(curve, m, fresh)?;
                Ok((fresh, false))
            }
        }
    }
}
