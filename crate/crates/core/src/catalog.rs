//! JSON catalogs of classification runs.
//!
//! Top-level keys are `meta`, `records` and `summary`. Each record embeds the
//! generator rows of both realized components, with `sigma` already applied,
//! as digit strings, so a record can be read without the input lists. The body has no timestamps; identical inputs give identical bytes.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::classify::{Classification, ClassificationRecord, PairCount, Target};
use crate::code::{Flags, HzCode};
use crate::error::{Error, Result};
use crate::format::{matrix_rows, rows_to_code, write_matrices};
use crate::gf::{LinearCode, Prime};
use crate::perm::Permutation;
use crate::ring::RingId;

pub const TOOL_NAME: &str = env!("CARGO_PKG_NAME");
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub meta: Meta,
    pub records: Vec<CatalogRecord>,
    pub summary: Summary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub ring: RingId,
    pub n: usize,
    pub target: Target,
    pub ca_list: ListDigest,
    pub cb_list: ListDigest,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListDigest {
    pub count: usize,
    /// SHA-256 of the list in matrix text format.
    pub sha256: String,
}

impl ListDigest {
    pub fn of(list: &[LinearCode]) -> Self {
        let digest = Sha256::digest(write_matrices(list).as_bytes());
        ListDigest {
            count: list.len(),
            sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub ring: RingId,
    pub n: usize,
    pub ca_id: usize,
    pub cb_id: usize,
    pub ca: Vec<String>,
    pub cb: Vec<String>,
    pub sigma: Permutation,
    pub flags: Flags,
    pub size: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    #[serde(rename = "SO")]
    pub so: usize,
    #[serde(rename = "SD")]
    pub sd: usize,
    #[serde(rename = "QSD")]
    pub qsd: usize,
    pub nice: usize,
    #[serde(rename = "LCD")]
    pub lcd: usize,
    pub pairs: Vec<PairCount>,
}

impl Summary {
    fn tally(records: &[CatalogRecord], pairs: Vec<PairCount>) -> Self {
        let count = |f: fn(&Flags) -> bool| records.iter().filter(|r| f(&r.flags)).count();
        Summary {
            total: records.len(),
            so: count(|f| f.so),
            sd: count(|f| f.sd),
            qsd: count(|f| f.qsd),
            nice: count(|f| f.nice),
            lcd: count(|f| f.lcd),
            pairs,
        }
    }
}

impl CatalogRecord {
    pub fn code(&self) -> Result<HzCode> {
        let ca = rows_to_code(Prime::Two, self.n, &self.ca)?;
        let cb = rows_to_code(Prime::Three, self.n, &self.cb)?;
        HzCode::build(self.ring, ca, cb)
    }

    pub fn to_record(&self) -> ClassificationRecord {
        ClassificationRecord {
            ring: self.ring,
            n: self.n,
            ca_id: self.ca_id,
            cb_id: self.cb_id,
            rep: self.sigma.clone(),
            flags: self.flags,
            cardinality: self.size as u128,
        }
    }
}

impl Catalog {
    pub fn new(cls: &Classification, la: &[LinearCode], lb: &[LinearCode]) -> Result<Self> {
        let records = cls
            .records
            .iter()
            .map(|r| {
                let code = r.realize(la, lb)?;
                Ok(CatalogRecord {
                    ring: r.ring,
                    n: r.n,
                    ca_id: r.ca_id,
                    cb_id: r.cb_id,
                    ca: matrix_rows(code.ca()),
                    cb: matrix_rows(code.cb()),
                    sigma: r.rep.clone(),
                    flags: r.flags,
                    size: u64::try_from(r.cardinality).map_err(|_| {
                        Error::budget("record size", r.cardinality, u64::MAX as u128)
                    })?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let summary = Summary::tally(&records, cls.pairs.clone());
        Ok(Catalog {
            meta: Meta {
                tool: TOOL_NAME.to_string(),
                version: TOOL_VERSION.to_string(),
                ring: cls.ring,
                n: cls.n,
                target: cls.target,
                ca_list: ListDigest::of(la),
                cb_list: ListDigest::of(lb),
            },
            records,
            summary,
        })
    }

    pub fn records(&self) -> Vec<ClassificationRecord> {
        self.records.iter().map(CatalogRecord::to_record).collect()
    }

    /// Summary tallies, input digests and embedded matrices all agree.
    pub fn check(&self, la: &[LinearCode], lb: &[LinearCode]) -> Result<()> {
        let fail = |m: String| Err(Error::VerificationFailed(m));
        if Summary::tally(&self.records, self.summary.pairs.clone()) != self.summary {
            return fail("summary does not match records".into());
        }
        if ListDigest::of(la) != self.meta.ca_list || ListDigest::of(lb) != self.meta.cb_list {
            return fail("input list digest mismatch".into());
        }
        for (i, rec) in self.records.iter().enumerate() {
            let embedded = rec.code()?;
            if embedded != rec.to_record().realize(la, lb)? {
                return fail(format!("record {i} does not match its inputs"));
            }
            if embedded.flags() != rec.flags || embedded.cardinality() != rec.size as u128 {
                return fail(format!("record {i} has stale flags or size"));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalog serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path
        .parent()
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let tmp = dir.join(format!(".{name}.tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}
