//! On-disk cache of solution-space bases, keyed by graph fingerprint and degree.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::CohomologyError;
use crate::linalg::{Int, IntVec, SubspaceBasis};

const VERSION: &str = "v1";

#[derive(Clone, Debug)]
pub struct SpaceCache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Stored {
    ambient: usize,
    pivots: Vec<u32>,
    columns: Vec<Vec<(u32, String)>>,
    denominator: String,
}

fn err(e: impl std::fmt::Display) -> CohomologyError {
    CohomologyError::Cache(e.to_string())
}

impl SpaceCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self, CohomologyError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(err)?;
        Ok(SpaceCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, fingerprint: &str, k: usize) -> PathBuf {
        let key = Sha256::digest(format!("{VERSION}|slice|{fingerprint}|{k}").as_bytes());
        self.dir.join(format!("{}.json", hex::encode(key)))
    }

    pub fn load(&self, fingerprint: &str, k: usize) -> Result<Option<SubspaceBasis>, CohomologyError> {
        let path = self.path(fingerprint, k);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(err(e)),
        };
        let stored: Stored = serde_json::from_str(&text).map_err(err)?;
        if stored.denominator != "1" || stored.pivots.len() != stored.columns.len() {
            return Err(err(format!("malformed entry {}", path.display())));
        }
        let mut columns = Vec::with_capacity(stored.columns.len());
        for col in stored.columns {
            let mut pairs = Vec::with_capacity(col.len());
            for (i, s) in col {
                let v: num_bigint::BigInt = s.parse().map_err(err)?;
                pairs.push((i, Int::from(v)));
            }
            columns.push(IntVec::from_pairs(pairs));
        }
        Ok(Some(SubspaceBasis::from_reduced(stored.ambient, columns, stored.pivots)))
    }

    pub fn store(&self, fingerprint: &str, k: usize, basis: &SubspaceBasis) -> Result<(), CohomologyError> {
        let stored = Stored {
            ambient: basis.ambient_dim(),
            pivots: basis.pivots().to_vec(),
            columns: basis
                .columns()
                .iter()
                .map(|c| c.entries().iter().map(|(i, a)| (*i, a.to_string())).collect())
                .collect(),
            denominator: "1".into(),
        };
        let path = self.path(fingerprint, k);
        let mut tmp = tempfile_in(&self.dir)?;
        tmp.1.write_all(serde_json::to_string(&stored).map_err(err)?.as_bytes()).map_err(err)?;
        drop(tmp.1);
        fs::rename(&tmp.0, &path).map_err(err)
    }
}

fn tempfile_in(dir: &Path) -> Result<(PathBuf, fs::File), CohomologyError> {
    let name = format!(".tmp-{}-{:?}", std::process::id(), std::thread::current().id());
    let path = dir.join(name.replace(['(', ')'], ""));
    let f = fs::File::create(&path).map_err(err)?;
    Ok((path, f))
}
