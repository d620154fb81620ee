//! Append-only JSON-lines catalog of fully scanned semigroups.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lengths::{delta_semigroup, DeltaSet};
use crate::presentation::betti_elements;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub generators: Vec<u64>,
    pub e: usize,
    pub frobenius: i64,
    pub symmetric: bool,
    pub delta: DeltaSet,
    pub betti: Vec<u64>,
    pub bound: u64,
    pub ts: u64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub partial: bool,
}

impl CatalogRecord {
    /// Full-bound record for `semigroup`, stamped with `ts`.
    pub fn compute(semigroup: &NumericalSemigroup, ts: u64) -> Result<Self> {
        let scan = delta_semigroup(semigroup, None)?;
        let betti = betti_elements(semigroup, None)?;
        if !betti.complete {
            return Err(Error::Internal(format!("Betti scan of {semigroup} incomplete")));
        }
        Ok(Self {
            generators: semigroup.generators().to_vec(),
            e: semigroup.embedding_dimension(),
            frobenius: semigroup.frobenius(),
            symmetric: semigroup.is_symmetric()?,
            delta: scan.delta,
            betti: betti.values(),
            bound: scan.bound,
            ts,
            partial: scan.partial,
        })
    }
}

/// Seconds since the Unix epoch.
pub fn now_ts() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// An open catalog file plus the records it already holds.
#[derive(Debug)]
pub struct Catalog {
    path: PathBuf,
    records: BTreeMap<Vec<u64>, CatalogRecord>,
}

impl Catalog {
    /// Loads `path`, treating a missing file as empty.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut records = BTreeMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: CatalogRecord = serde_json::from_str(&line)?;
                records.entry(rec.generators.clone()).or_insert(rec);
            }
        }
        Ok(Self { path, records })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, generators: &[u64]) -> Option<&CatalogRecord> {
        self.records.get(generators)
    }

    pub fn records(&self) -> impl Iterator<Item = &CatalogRecord> {
        self.records.values()
    }

    /// Appends one line; returns `false` if the tuple was already present.
    pub fn append(&mut self, record: CatalogRecord) -> Result<bool> {
        if record.partial {
            return Err(Error::PartialScanRejected);
        }
        if self.records.contains_key(&record.generators) {
            return Ok(false);
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(file, "{}", serde_json::to_string(&record)?)?;
        self.records.insert(record.generators.clone(), record);
        Ok(true)
    }
}

/// One-shot append to the catalog at `path`.
pub fn catalog_append(record: CatalogRecord, path: impl AsRef<Path>) -> Result<bool> {
    Catalog::open(path)?.append(record)
}

/// Computes and appends records for every semigroup not yet cataloged,
/// stopping after `limit` new records. Returns how many were added.
pub fn catalog_batch(
    catalog: &mut Catalog,
    semigroups: impl IntoIterator<Item = NumericalSemigroup>,
    limit: Option<usize>,
    ts: u64,
) -> Result<usize> {
    let mut added = 0;
    for s in semigroups {
        if limit.is_some_and(|l| added >= l) {
            break;
        }
        if catalog.get(s.generators()).is_some() {
            continue;
        }
        if catalog.append(CatalogRecord::compute(&s, ts)?)? {
            added += 1;
        }
    }
    Ok(added)
}

/// Catalog lines sorted by generator tuple, for order-insensitive comparison.
pub fn canonical_lines(path: impl AsRef<Path>) -> Result<Vec<String>> {
    let catalog = Catalog::open(path)?;
    catalog
        .records()
        .map(|r| serde_json::to_string(r).map_err(Error::from))
        .collect()
}
