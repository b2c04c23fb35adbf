//! The exclusion catalog.
//!
//! Every filter is a hypothesis-gated predicate on a candidate type `t` of
//! FP dimension `N`. A filter whose hypothesis does not hold reports
//! [`Status::Inapplicable`]; otherwise it reports pass, reject or (for the
//! replayed proof chains only) inconclusive. Pass means "not excluded by this
//! argument", nothing more.

mod adjoint;
mod advanced;
mod basic;
mod catalog;
mod sixth_power;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::pipeline::ClassificationReport;
use crate::typevec::TypeVector;
use crate::FactoredInt;

pub use adjoint::{adjoint_candidates, forced_invertible_divisor};
pub use advanced::{known_pointed_shape, KnownPointed};
pub use catalog::{citation, citations, Citation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FilterId {
    Structural,
    Parity,
    Dim3Divisibility,
    StabilizerPower,
    GradingBound,
    TwoLevel,
    SquareDivides,
    PointedDividesIsotypic,
    PqOrder,
    P2Order,
    PerfectAdjoint,
    RankWindow,
    KnownPointed,
    AdjointFeasible,
    AdjointShape,
    ModularFactor,
    SixthPower,
}

impl FilterId {
    /// Every filter, in canonical evaluation order.
    pub const ALL: [FilterId; 17] = [
        FilterId::Structural,
        FilterId::Parity,
        FilterId::Dim3Divisibility,
        FilterId::StabilizerPower,
        FilterId::GradingBound,
        FilterId::TwoLevel,
        FilterId::SquareDivides,
        FilterId::PointedDividesIsotypic,
        FilterId::PqOrder,
        FilterId::P2Order,
        FilterId::PerfectAdjoint,
        FilterId::RankWindow,
        FilterId::KnownPointed,
        FilterId::AdjointFeasible,
        FilterId::AdjointShape,
        FilterId::ModularFactor,
        FilterId::SixthPower,
    ];

    /// The type-statistics stage: parity, divisibility and grading bounds.
    pub const BASIC: [FilterId; 8] = [
        FilterId::Structural,
        FilterId::Parity,
        FilterId::Dim3Divisibility,
        FilterId::StabilizerPower,
        FilterId::GradingBound,
        FilterId::TwoLevel,
        FilterId::SquareDivides,
        FilterId::PointedDividesIsotypic,
    ];

    /// Short key, e.g. `f13`.
    pub fn key(self) -> &'static str {
        match self {
            FilterId::Structural => "s0",
            FilterId::Parity => "f1",
            FilterId::Dim3Divisibility => "f2",
            FilterId::StabilizerPower => "f3",
            FilterId::GradingBound => "f4",
            FilterId::TwoLevel => "f5",
            FilterId::SquareDivides => "f8",
            FilterId::PointedDividesIsotypic => "f9",
            FilterId::PqOrder => "f10",
            FilterId::P2Order => "f11",
            FilterId::PerfectAdjoint => "f12",
            FilterId::RankWindow => "f13",
            FilterId::KnownPointed => "f14",
            FilterId::AdjointFeasible => "f15",
            FilterId::AdjointShape => "f16",
            FilterId::ModularFactor => "f17",
            FilterId::SixthPower => "f18",
        }
    }

    /// Full identifier, e.g. `f13_rank_window`.
    pub fn name(self) -> &'static str {
        match self {
            FilterId::Structural => "structural",
            FilterId::Parity => "f1_parity",
            FilterId::Dim3Divisibility => "f2_dim3_divisibility",
            FilterId::StabilizerPower => "f3_stabilizer_power",
            FilterId::GradingBound => "f4_grading_bound",
            FilterId::TwoLevel => "f5_two_level",
            FilterId::SquareDivides => "f8_square_divides",
            FilterId::PointedDividesIsotypic => "f9_pointed_divides_isotypic",
            FilterId::PqOrder => "f10_pq_order",
            FilterId::P2Order => "f11_p2_order",
            FilterId::PerfectAdjoint => "f12_perfect_adjoint",
            FilterId::RankWindow => "f13_rank_window",
            FilterId::KnownPointed => "f14_known_pointed",
            FilterId::AdjointFeasible => "f15_adjoint_feasible",
            FilterId::AdjointShape => "f16_adjoint_shape",
            FilterId::ModularFactor => "f17_modular_factor",
            FilterId::SixthPower => "f18_sixth_power",
        }
    }

    /// Key into the citation table.
    pub fn citation_key(self) -> &'static str {
        match self {
            FilterId::Structural => "pointed-part-and-solvability",
            FilterId::Parity => "odd-parity",
            FilterId::Dim3Divisibility => "dim3-subcategory",
            FilterId::StabilizerPower => "stabilizer-power",
            FilterId::GradingBound => "grading-bound",
            FilterId::TwoLevel => "two-level",
            FilterId::SquareDivides => "square-divides",
            FilterId::PointedDividesIsotypic => "pointed-divides-isotypic",
            FilterId::PqOrder => "pq-order",
            FilterId::P2Order => "p2-order",
            FilterId::PerfectAdjoint => "perfect-adjoint",
            FilterId::RankWindow => "rank-window",
            FilterId::KnownPointed => "known-pointed",
            FilterId::AdjointFeasible => "adjoint-feasible",
            FilterId::AdjointShape => "adjoint-shape",
            FilterId::ModularFactor => "modular-factor",
            FilterId::SixthPower => "sixth-power",
        }
    }

    /// What must hold for the filter to say anything.
    pub fn hypothesis_text(self) -> &'static str {
        match self {
            FilterId::Structural
            | FilterId::Parity
            | FilterId::StabilizerPower
            | FilterId::GradingBound
            | FilterId::SquareDivides
            | FilterId::PointedDividesIsotypic => "always applies",
            FilterId::Dim3Divisibility => {
                "d_2 = 3 (strict mode: and no simple objects of dimension 9)"
            }
            FilterId::TwoLevel => "type of the form (1,n;d,m)",
            FilterId::PqOrder => {
                "N = p^m q^n d with m in {2,3}, 1 <= n <= 4, d square-free prime to pq, n_1 = p"
            }
            FilterId::P2Order => {
                "N = p^3 q^n d with p < q, 1 <= n <= 4, d square-free prime to pq, n_1 = p^2"
            }
            FilterId::PerfectAdjoint => "n_1 divides N and N/n_1 > 1",
            FilterId::RankWindow => "27 <= rank <= 49 and rank != 1 mod 8",
            FilterId::KnownPointed => {
                "N = q^n d (n <= 4, d square-free prime to q) or N = 3^5 d (d square-free prime to 3)"
            }
            FilterId::AdjointFeasible => "non-pointed type with n_1 dividing N",
            FilterId::AdjointShape => {
                "N = p^3 q^s m or p^t m, n_1 = p, a p-dimensional class of size prime to p, \
                 and a class of prime dimension q != p"
            }
            FilterId::ModularFactor => "a prime r dividing n_1 with r^2 not dividing N",
            FilterId::SixthPower => "N = p^6 and t = (1,p^2;p,x;p^2,y) with y > 0 and x prime to p",
        }
    }

    pub fn is_basic(self) -> bool {
        Self::BASIC.contains(&self)
    }

    /// Evaluates the filter, checking the shared precondition first.
    pub fn evaluate(
        self,
        t: &TypeVector,
        n: u64,
        ctx: &FilterContext<'_>,
    ) -> Result<FilterVerdict> {
        let fac = check_precondition(t, n)?;
        self.evaluate_subject(&Subject { t, n, fac: &fac }, ctx)
    }

    /// Whether the filter's hypothesis holds for `(t, n)`.
    pub fn hypothesis_holds(self, t: &TypeVector, n: u64, f2_mode: F2Mode) -> Result<bool> {
        let fac = check_precondition(t, n)?;
        Ok(self.hypothesis_subject(&Subject { t, n, fac: &fac }, f2_mode))
    }

    pub(crate) fn hypothesis_subject(self, s: &Subject<'_>, f2_mode: F2Mode) -> bool {
        match self {
            FilterId::Structural
            | FilterId::Parity
            | FilterId::StabilizerPower
            | FilterId::GradingBound
            | FilterId::SquareDivides
            | FilterId::PointedDividesIsotypic => true,
            FilterId::Dim3Divisibility => basic::dim3_hypothesis(s, f2_mode).is_some(),
            FilterId::TwoLevel => basic::two_level_hypothesis(s).is_some(),
            FilterId::PqOrder => advanced::pq_hypothesis(s).is_some(),
            FilterId::P2Order => advanced::p2_hypothesis(s).is_some(),
            FilterId::PerfectAdjoint => advanced::perfect_adjoint_hypothesis(s).is_some(),
            FilterId::RankWindow => advanced::rank_window_hypothesis(s),
            FilterId::KnownPointed => known_pointed_shape(s.fac).is_some(),
            FilterId::AdjointFeasible => adjoint::feasible_hypothesis(s),
            FilterId::AdjointShape => advanced::adjoint_shape_hypothesis(s).is_some(),
            FilterId::ModularFactor => advanced::modular_factor_hypothesis(s).is_some(),
            FilterId::SixthPower => sixth_power::hypothesis(s).is_some(),
        }
    }

    pub(crate) fn evaluate_subject(
        self,
        s: &Subject<'_>,
        ctx: &FilterContext<'_>,
    ) -> Result<FilterVerdict> {
        let finding = match self {
            FilterId::Structural => Some(basic::structural(s)),
            FilterId::Parity => Some(basic::parity(s)),
            FilterId::Dim3Divisibility => {
                basic::dim3_hypothesis(s, ctx.f2_mode).map(|h| basic::dim3(s, h))
            }
            FilterId::StabilizerPower => Some(basic::stabilizer_power(s)),
            FilterId::GradingBound => Some(basic::grading_bound(s)),
            FilterId::TwoLevel => basic::two_level_hypothesis(s).map(|h| basic::two_level(s, h)),
            FilterId::SquareDivides => Some(basic::square_divides(s)),
            FilterId::PointedDividesIsotypic => Some(basic::pointed_divides_isotypic(s)),
            FilterId::PqOrder => advanced::pq_hypothesis(s).map(|h| advanced::pq_order(s, h)),
            FilterId::P2Order => advanced::p2_hypothesis(s).map(|h| advanced::p2_order(s, h)),
            FilterId::PerfectAdjoint => advanced::perfect_adjoint_hypothesis(s)
                .map(|cofactor| advanced::perfect_adjoint(s, cofactor)),
            FilterId::RankWindow => {
                advanced::rank_window_hypothesis(s).then(|| advanced::rank_window(s))
            }
            FilterId::KnownPointed => {
                known_pointed_shape(s.fac).map(|k| advanced::known_pointed(s, k))
            }
            FilterId::AdjointFeasible => {
                adjoint::feasible_hypothesis(s).then(|| adjoint::feasible(s))
            }
            FilterId::AdjointShape => {
                advanced::adjoint_shape_hypothesis(s).map(|h| advanced::adjoint_shape(s, h))
            }
            FilterId::ModularFactor => match advanced::modular_factor_hypothesis(s) {
                Some(rs) => Some(advanced::modular_factor(s, &rs, ctx)?),
                None => None,
            },
            FilterId::SixthPower => sixth_power::hypothesis(s).map(|h| sixth_power::check(s, h)),
        };
        let (status, reason) = match finding {
            None => (
                Status::Inapplicable,
                format!("hypothesis not met: {}", self.hypothesis_text()),
            ),
            Some(Finding::Pass(r)) => (Status::Pass, r),
            Some(Finding::Reject(r)) => (Status::Reject, r),
            Some(Finding::Inconclusive(r)) => (Status::Inconclusive, r),
        };
        Ok(FilterVerdict {
            filter: self,
            status,
            reason,
            citation: self.citation_key(),
        })
    }
}

impl fmt::Display for FilterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FilterId {
    type Err = Error;

    /// Accepts either the short key (`f13`) or the full name.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        FilterId::ALL
            .into_iter()
            .find(|id| id.key() == s || id.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown filter id `{s}`")))
    }
}

impl Serialize for FilterId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Parses a list of filter ids, keeping the given order.
pub fn parse_filter_set<S: AsRef<str>>(ids: &[S]) -> Result<Vec<FilterId>> {
    ids.iter().map(|s| s.as_ref().parse()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Reject,
    Inapplicable,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Reject => "reject",
            Status::Inapplicable => "inapplicable",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterVerdict {
    pub filter: FilterId,
    pub status: Status,
    pub reason: String,
    pub citation: &'static str,
}

/// How the dimension-3 divisibility filter treats types with 9-dimensional
/// simple objects.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum F2Mode {
    /// Applies `n_1 + 9 n_2 | N` whenever `d_2 = 3`.
    #[default]
    Legacy,
    /// Only when no simple object has dimension 9.
    Strict,
}

impl fmt::Display for F2Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            F2Mode::Legacy => "legacy",
            F2Mode::Strict => "strict",
        })
    }
}

impl FromStr for F2Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "legacy" => Ok(F2Mode::Legacy),
            "strict" => Ok(F2Mode::Strict),
            other => Err(Error::Config(format!("unknown f2 mode `{other}`"))),
        }
    }
}

/// Recursion entry point for filters that need the classification of a
/// smaller dimension.
pub trait ClassifyHandle: Sync {
    /// Full-mode classification of `dim`.
    fn classify_full(&self, dim: u64) -> Result<Arc<ClassificationReport>>;
}

#[derive(Clone, Copy)]
pub struct FilterContext<'a> {
    pub f2_mode: F2Mode,
    handle: Option<&'a dyn ClassifyHandle>,
}

impl<'a> FilterContext<'a> {
    /// A context without recursion; the modular-factor filter errors under it.
    pub fn standalone(f2_mode: F2Mode) -> Self {
        Self {
            f2_mode,
            handle: None,
        }
    }

    pub fn with_handle(f2_mode: F2Mode, handle: &'a dyn ClassifyHandle) -> Self {
        Self {
            f2_mode,
            handle: Some(handle),
        }
    }

    pub(crate) fn handle(&self) -> Result<&'a dyn ClassifyHandle> {
        self.handle.ok_or_else(|| {
            Error::Config("the modular-factor filter needs a classifier handle".into())
        })
    }
}

impl fmt::Debug for FilterContext<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FilterContext")
            .field("f2_mode", &self.f2_mode)
            .field("recursive", &self.handle.is_some())
            .finish()
    }
}

/// A candidate together with its dimension's factorization.
pub(crate) struct Subject<'a> {
    pub t: &'a TypeVector,
    pub n: u64,
    pub fac: &'a FactoredInt,
}

pub(crate) enum Finding {
    Pass(String),
    Reject(String),
    Inconclusive(String),
}

pub(crate) fn check_precondition(t: &TypeVector, n: u64) -> Result<FactoredInt> {
    if n == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenDimension(n));
    }
    if t.fpdim() != n {
        return Err(Error::InvalidInput(format!(
            "type {t} has FP dimension {} but N = {n}",
            t.fpdim()
        )));
    }
    factorize(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_through_keys_and_names() {
        for id in FilterId::ALL {
            assert_eq!(id.key().parse::<FilterId>().unwrap(), id);
            assert_eq!(id.name().parse::<FilterId>().unwrap(), id);
        }
        assert!(matches!("f6".parse::<FilterId>(), Err(Error::Config(_))));
    }

    #[test]
    fn canonical_order_is_sorted() {
        let mut sorted = FilterId::ALL;
        sorted.sort();
        assert_eq!(sorted, FilterId::ALL);
        assert!(FilterId::BASIC.iter().all(|id| id.is_basic()));
        assert_eq!(FilterId::ALL.iter().filter(|id| id.is_basic()).count(), 8);
    }

    #[test]
    fn precondition_violations_are_invalid_input() {
        let t: TypeVector = "(1,441)".parse().unwrap();
        let ctx = FilterContext::standalone(F2Mode::Legacy);
        assert!(matches!(
            FilterId::Parity.evaluate(&t, 443, &ctx),
            Err(Error::InvalidInput(_))
        ));
        let t: TypeVector = "(1,442)".parse().unwrap();
        assert!(matches!(
            FilterId::Parity.evaluate(&t, 442, &ctx),
            Err(Error::EvenDimension(442))
        ));
    }
}
