//! Embedded reference lists and the comparison against them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::ClassificationReport;
use crate::error::{Error, Result};
use crate::filters::FilterId;
use crate::typevec::TypeVector;

const REFERENCE: &str = include_str!("../../data/reference.txt");
const REFERENCE_SHA256: &str = "381cb4f6c242690cca1931e52ef127cd2b0bee6d279d7c490747bd3019814e73";

pub const FIXTURE_DIMENSIONS: [u64; 13] = [
    225, 243, 441, 675, 729, 1089, 1125, 1215, 1225, 1323, 1521, 1575, 1701,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    /// After the basic filters.
    Prefilter,
    /// After the full pipeline.
    Final,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Prefilter => "prefilter",
            Stage::Final => "final",
        })
    }
}

/// A reference type together with a filter expected to reject it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attribution {
    pub dimension: u64,
    #[serde(rename = "type")]
    pub candidate: TypeVector,
    pub filter: FilterId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub dimension: u64,
    pub stage: Stage,
    pub missing_from_engine: Vec<TypeVector>,
    pub extra_in_engine: Vec<TypeVector>,
}

impl DiscrepancyReport {
    pub fn is_empty(&self) -> bool {
        self.missing_from_engine.is_empty() && self.extra_in_engine.is_empty()
    }
}

struct Tables {
    lists: BTreeMap<(u64, Stage), Vec<TypeVector>>,
    excluded: Vec<Attribution>,
}

fn tables() -> Result<&'static Tables> {
    static TABLES: OnceLock<std::result::Result<Tables, Error>> = OnceLock::new();
    TABLES.get_or_init(load).as_ref().map_err(Clone::clone)
}

/// Hex SHA-256 of the embedded fixture file.
pub fn reference_checksum() -> String {
    format!("{:x}", Sha256::digest(REFERENCE.as_bytes()))
}

fn load() -> Result<Tables> {
    let sum = reference_checksum();
    if sum != REFERENCE_SHA256 {
        return Err(Error::Internal(format!(
            "reference fixtures were modified: checksum {sum}, expected {REFERENCE_SHA256}"
        )));
    }
    let mut lists = BTreeMap::new();
    let mut excluded = Vec::new();
    for (no, line) in REFERENCE.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| Error::Internal(format!("reference line {}: {msg}", no + 1));
        let mut fields = line.split_whitespace();
        let kind = fields.next().ok_or_else(|| bad("empty record"))?;
        let dim: u64 = fields
            .next()
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| bad("missing dimension"))?;
        let rest: Vec<&str> = fields.collect();
        let parse = |s: &str| -> Result<TypeVector> {
            let t: TypeVector = s.parse()?;
            if t.fpdim() != dim {
                return Err(bad(&format!("{t} has dimension {}", t.fpdim())));
            }
            Ok(t)
        };
        match kind {
            "prefilter" | "final" => {
                let stage = if kind == "prefilter" {
                    Stage::Prefilter
                } else {
                    Stage::Final
                };
                let mut types = rest.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()?;
                types.sort();
                if lists.insert((dim, stage), types).is_some() {
                    return Err(bad("duplicate record"));
                }
            }
            "excluded" => {
                let [t, f] = rest[..] else {
                    return Err(bad("expected a type and a filter"));
                };
                excluded.push(Attribution {
                    dimension: dim,
                    candidate: parse(t)?,
                    filter: f.parse()?,
                });
            }
            other => return Err(bad(&format!("unknown record kind `{other}`"))),
        }
    }
    Ok(Tables { lists, excluded })
}

/// The reference list for a fixture dimension and stage, sorted.
pub fn reference_types(dimension: u64, stage: Stage) -> Result<&'static [TypeVector]> {
    tables()?
        .lists
        .get(&(dimension, stage))
        .map(Vec::as_slice)
        .ok_or(Error::NotFound(dimension))
}

/// Every excluded reference type with the filter expected to reject it.
pub fn attributions() -> Result<&'static [Attribution]> {
    Ok(&tables()?.excluded)
}

/// Set differences between the report's survivors and the reference list
/// for the report's stage.
pub fn compare_reference(report: &ClassificationReport) -> Result<DiscrepancyReport> {
    let stage = report.mode.stage();
    let expected = reference_types(report.dimension, stage)?;
    let missing_from_engine = expected
        .iter()
        .filter(|t| !report.survivors.contains(t))
        .cloned()
        .collect();
    let extra_in_engine = report
        .survivors
        .iter()
        .filter(|t| !expected.contains(t))
        .cloned()
        .collect();
    Ok(DiscrepancyReport {
        dimension: report.dimension,
        stage,
        missing_from_engine,
        extra_in_engine,
    })
}
