//! Classification driver: enumeration, filter runs, recursion through the
//! memo cache, dimension scans and comparison with the reference tables.

mod reference;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::factorize;
use crate::enumerator::{check_odd, partition, Judged, Partition};
use crate::error::{Error, Result};
use crate::filters::{
    check_precondition, known_pointed_shape, ClassifyHandle, F2Mode, FilterContext, FilterId,
    FilterVerdict, KnownPointed, Subject,
};
use crate::typevec::TypeVector;
use crate::FactoredInt;

pub use reference::{
    attributions, compare_reference, reference_checksum, reference_types, Attribution,
    DiscrepancyReport, Stage, FIXTURE_DIMENSIONS,
};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Which filter set a classification runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Structural constraints and the type-statistics filters.
    Basic,
    /// Everything, including the recursive and proof-replay filters.
    Full,
}

impl Mode {
    pub fn filters(self) -> &'static [FilterId] {
        match self {
            Mode::Basic => &FilterId::BASIC,
            Mode::Full => &FilterId::ALL,
        }
    }

    pub fn stage(self) -> Stage {
        match self {
            Mode::Basic => Stage::Prefilter,
            Mode::Full => Stage::Final,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Basic => "basic",
            Mode::Full => "full",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "basic" => Ok(Mode::Basic),
            "full" => Ok(Mode::Full),
            other => Err(Error::Config(format!("unknown filter mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub dimension: u64,
    pub factorization: FactoredInt,
    pub mode: Mode,
    pub f2_mode: F2Mode,
    pub raw_count: usize,
    pub survivors: Vec<TypeVector>,
    pub rejections: Vec<Judged>,
    pub unresolved: Vec<Judged>,
    /// Set when a scan settled the dimension with this filter alone.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shortcut: Option<FilterId>,
    #[serde(skip)]
    pub elapsed: Duration,
    pub engine_version: &'static str,
}

impl ClassificationReport {
    pub fn non_pointed_survivors(&self) -> impl Iterator<Item = &TypeVector> {
        self.survivors.iter().filter(|t| !t.is_pointed())
    }

    pub fn rejection_of(&self, t: &TypeVector) -> Option<&Judged> {
        self.rejections.iter().find(|j| &j.candidate == t)
    }

    /// True when this report and `other` agree on everything but timing.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.dimension == other.dimension
            && self.factorization == other.factorization
            && self.mode == other.mode
            && self.f2_mode == other.f2_mode
            && self.raw_count == other.raw_count
            && self.survivors == other.survivors
            && self.rejections == other.rejections
            && self.unresolved == other.unresolved
            && self.shortcut == other.shortcut
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub f2_mode: F2Mode,
    /// Cache classifications, including the ones reached by recursion.
    pub memoize: bool,
    /// Keep evaluating after the first rejecting filter, so rejections list
    /// every rejecting verdict.
    pub exhaustive: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            f2_mode: F2Mode::Legacy,
            memoize: true,
            exhaustive: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub mode: Mode,
    /// In full mode, settle dimensions of shape `q^n d` with the
    /// known-pointed filter alone.
    pub shortcut: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            mode: Mode::Full,
            shortcut: true,
        }
    }
}

type MemoKey = (u64, Mode, F2Mode, bool);

/// Owns the configuration and the memo cache shared by recursive filters.
pub struct Engine {
    config: EngineConfig,
    memo: RwLock<HashMap<MemoKey, Arc<ClassificationReport>>>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(EngineConfig::default())
    }
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        Self {
            config,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_f2_mode(f2_mode: F2Mode) -> Self {
        Self::new(EngineConfig {
            f2_mode,
            ..EngineConfig::default()
        })
    }

    pub fn config(&self) -> EngineConfig {
        self.config
    }

    pub fn context(&self) -> FilterContext<'_> {
        FilterContext::with_handle(self.config.f2_mode, self)
    }

    pub fn classify(&self, n: u64, mode: Mode) -> Result<Arc<ClassificationReport>> {
        check_odd(n)?;
        let key = (n, mode, self.config.f2_mode, self.config.exhaustive);
        if self.config.memoize {
            if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
                return Ok(Arc::clone(hit));
            }
        }
        let report = Arc::new(self.run(n, mode.filters(), mode, None)?);
        if self.config.memoize {
            let mut memo = self.memo.write().expect("memo lock");
            return Ok(Arc::clone(memo.entry(key).or_insert(report)));
        }
        Ok(report)
    }

    /// Runs an arbitrary filter list (in order) over the raw candidates,
    /// retaining every rejecting verdict.
    pub fn enumerate_with(&self, n: u64, filters: &[FilterId]) -> Result<Partition> {
        partition(n, filters, &self.context(), false)
    }

    /// One report per odd dimension below `max`, ascending.
    pub fn scan(&self, max: u64, opts: ScanOptions) -> Result<Vec<Arc<ClassificationReport>>> {
        if max == 0 {
            return Err(Error::InvalidInput("scan bound must be at least 1".into()));
        }
        let dims: Vec<u64> = (1..max).step_by(2).collect();
        dims.par_iter()
            .map(|&n| {
                let fast = opts.mode == Mode::Full
                    && opts.shortcut
                    && known_pointed_shape(&factorize(n)?)
                        == Some(KnownPointed::PrimePowerTimesSquareFree);
                if fast {
                    self.run(
                        n,
                        &[FilterId::KnownPointed],
                        opts.mode,
                        Some(FilterId::KnownPointed),
                    )
                    .map(Arc::new)
                } else {
                    self.classify(n, opts.mode)
                }
            })
            .collect()
    }

    /// Every filter's verdict on `t`, in canonical order, without early exit.
    pub fn explain(&self, n: u64, t: &TypeVector) -> Result<Vec<FilterVerdict>> {
        let fac = check_precondition(t, n)?;
        let subject = Subject { t, n, fac: &fac };
        let ctx = self.context();
        FilterId::ALL
            .iter()
            .map(|id| id.evaluate_subject(&subject, &ctx))
            .collect()
    }

    fn run(
        &self,
        n: u64,
        filters: &[FilterId],
        mode: Mode,
        shortcut: Option<FilterId>,
    ) -> Result<ClassificationReport> {
        let start = Instant::now();
        let part = partition(n, filters, &self.context(), !self.config.exhaustive)?;
        Ok(ClassificationReport {
            dimension: n,
            factorization: factorize(n)?,
            mode,
            f2_mode: self.config.f2_mode,
            raw_count: part.raw_count,
            survivors: part.survivors,
            rejections: part.rejections,
            unresolved: part.unresolved,
            shortcut,
            elapsed: start.elapsed(),
            engine_version: ENGINE_VERSION,
        })
    }
}

impl ClassifyHandle for Engine {
    fn classify_full(&self, dim: u64) -> Result<Arc<ClassificationReport>> {
        self.classify(dim, Mode::Full)
    }
}
