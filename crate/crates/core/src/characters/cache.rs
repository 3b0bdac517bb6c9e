//! On-disk cache of character tables, one JSON file per degree.
//!
//! File `chartab_<n>.json`:
//! `{"n": n, "order": ["[3]", ...], "rows": {"[3]": ["1", ...], ...}}`
//! with every integer written as a decimal string. A file is trusted only
//! after its shape checks out and one row, chosen from the seed, matches a
//! fresh Murnaghan–Nakayama evaluation; anything else is recomputed and
//! overwritten.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use super::{check_degree, compute_row, CharacterTable, MAX_TABLE_DEGREE};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

pub const CACHE_DIR_ENV: &str = "DIAGRAM_OPS_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".diagram-ops-cache";
pub const DEFAULT_MAX_DEGREE: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    /// Loaded and verified.
    Hit,
    /// No file; computed and written.
    Miss,
    /// File present but invalid; recomputed and overwritten.
    Repaired,
}

#[derive(Clone, Debug)]
pub struct CharTableCache {
    dir: PathBuf,
    max_degree: u32,
    seed: u64,
}

impl CharTableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CharTableCache {
            dir: dir.into(),
            max_degree: DEFAULT_MAX_DEGREE,
            seed: 0,
        }
    }

    /// Directory from `DIAGRAM_OPS_CACHE_DIR`, else `.diagram-ops-cache/`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
        Self::new(dir)
    }

    pub fn with_max_degree(mut self, max_degree: u32) -> Self {
        self.max_degree = max_degree.min(MAX_TABLE_DEGREE);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, n: u32) -> PathBuf {
        self.dir.join(format!("chartab_{n}.json"))
    }

    pub fn char_table(&self, n: u32) -> Result<Arc<CharacterTable>> {
        self.load_or_compute(n).map(|(t, _)| t)
    }

    pub fn load_or_compute(&self, n: u32) -> Result<(Arc<CharacterTable>, CacheStatus)> {
        check_degree(n, self.max_degree)?;
        let path = self.path_for(n);
        let status = match fs::read_to_string(&path) {
            Ok(text) => match self.validate(n, &text) {
                Ok(table) => return Ok((Arc::new(table), CacheStatus::Hit)),
                Err(reason) => {
                    log::warn!("discarding cached table {}: {reason}", path.display());
                    CacheStatus::Repaired
                }
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => CacheStatus::Miss,
            Err(source) => return Err(Error::Io { path, source }),
        };
        let table = super::table(n)?;
        self.write(&table)?;
        Ok((table, status))
    }

    fn validate(&self, n: u32, text: &str) -> std::result::Result<CharacterTable, String> {
        let file: CacheFileIn = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if file.n != n {
            return Err(format!("file is for n = {}", file.n));
        }
        let order = partitions_of(n).map_err(|e| e.to_string())?;
        let names: Vec<String> = order.iter().map(Partition::to_string).collect();
        if file.order != names {
            return Err("column order differs from canonical order".into());
        }
        if file.rows.len() != order.len() {
            return Err("wrong number of rows".into());
        }
        let mut rows = Vec::with_capacity(order.len());
        for name in &names {
            let row = file.rows.get(name).ok_or(format!("missing row {name}"))?;
            if row.len() != order.len() {
                return Err(format!("row {name} has wrong length"));
            }
            let parsed = row
                .iter()
                .map(|v| v.parse::<i64>().map_err(|_| format!("bad entry {v:?}")))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            rows.push(parsed);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ n as u64);
        let probe = rng.random_range(0..order.len());
        if compute_row(&order[probe], &order) != rows[probe] {
            return Err(format!("row {} does not match recomputation", order[probe]));
        }
        let table = CharacterTable::from_parts(n, order, rows);
        table.verify_orthogonality().map_err(|e| e.to_string())?;
        Ok(table)
    }

    fn write(&self, table: &CharacterTable) -> Result<()> {
        let io = |source| Error::Io {
            path: self.dir.clone(),
            source,
        };
        fs::create_dir_all(&self.dir).map_err(io)?;
        let path = self.path_for(table.degree());
        let text = to_json(table);
        // write-then-rename keeps readers from seeing a partial file
        let tmp = self.dir.join(format!(
            ".chartab_{}.{}.tmp",
            table.degree(),
            std::process::id()
        ));
        fs::write(&tmp, text).map_err(io)?;
        fs::rename(&tmp, &path).map_err(|source| Error::Io { path, source })
    }
}

/// Serializes a table in the cache file format.
pub fn to_json(table: &CharacterTable) -> String {
    serde_json::to_string(&CacheFileOut(table)).expect("table serializes")
}

#[derive(Deserialize)]
struct CacheFileIn {
    n: u32,
    order: Vec<String>,
    rows: BTreeMap<String, Vec<String>>,
}

struct CacheFileOut<'a>(&'a CharacterTable);

struct Rows<'a>(&'a CharacterTable);

impl Serialize for CacheFileOut<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let t = self.0;
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("n", &t.degree())?;
        let order: Vec<String> = t.order().iter().map(Partition::to_string).collect();
        map.serialize_entry("order", &order)?;
        map.serialize_entry("rows", &Rows(t))?;
        map.end()
    }
}

impl Serialize for Rows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let t = self.0;
        let mut map = s.serialize_map(Some(t.order().len()))?;
        for (shape, row) in t.order().iter().zip(t.rows()) {
            let vals: Vec<String> = row.iter().map(i64::to_string).collect();
            map.serialize_entry(&shape.to_string(), &vals)?;
        }
        map.end()
    }
}
