//! Classification of maximally non-self-dual modular categories by type.
//!
//! A type `(d_1,n_1;...;d_s,n_s)` records how many simple objects a category
//! has of each Frobenius-Perron dimension. The engine enumerates every type
//! of a given odd dimension, runs a catalog of exclusion filters over it and
//! reports what survives, with a verdict trail for everything that did not.

pub mod arith;
pub mod enumerator;
pub mod error;
pub mod filters;
pub mod oracle;
pub mod pipeline;
pub mod typevec;

/// Dimensions and counts.
pub type Dim = u64;
pub type FactoredInt = arith::Factored<Dim>;

pub use enumerator::{enumerate_raw, enumerate_with, Judged, Partition};
pub use error::{Error, Result};
pub use filters::{F2Mode, FilterContext, FilterId, FilterVerdict, Status};
pub use pipeline::{
    compare_reference, ClassificationReport, DiscrepancyReport, Engine, EngineConfig, Mode,
    ScanOptions, Stage, ENGINE_VERSION, FIXTURE_DIMENSIONS,
};
pub use typevec::{Entry, TypeVector};
