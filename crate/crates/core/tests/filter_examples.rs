use mnsd_core::filters::{adjoint_candidates, forced_invertible_divisor};
use mnsd_core::{Engine, Error, F2Mode, FilterContext, FilterId, Status, TypeVector};

use FilterId::*;
use Status::*;

fn tv(s: &str) -> TypeVector {
    s.parse().unwrap()
}

fn status_in(mode: F2Mode, id: FilterId, t: &str, n: u64) -> Status {
    let engine = Engine::with_f2_mode(mode);
    id.evaluate(&tv(t), n, &engine.context()).unwrap().status
}

fn status(id: FilterId, t: &str, n: u64) -> Status {
    status_in(F2Mode::Legacy, id, t, n)
}

#[test]
fn catalog_examples() {
    let cases: &[(FilterId, &str, u64, Status)] = &[
        (Parity, "(1,3;3,16;7,6)", 441, Pass),
        (Parity, "(1,1;2,2)", 9, Reject),
        (Parity, "(1,4;3,5)", 49, Reject),
        (Dim3Divisibility, "(1,9;3,80)", 729, Pass),
        (Dim3Divisibility, "(1,9;3,44;9,4)", 729, Reject),
        (Dim3Divisibility, "(1,45;3,130)", 1215, Pass),
        (StabilizerPower, "(1,21;3,14;7,24)", 1323, Pass),
        (StabilizerPower, "(1,3;3,2;5,4)", 121, Reject),
        (StabilizerPower, "(1,9;3,6)", 63, Pass),
        (GradingBound, "(1,9;3,2)", 27, Reject),
        (GradingBound, "(1,9;3,8;9,8)", 729, Pass),
        (GradingBound, "(1,225)", 225, Pass),
        (TwoLevel, "(1,9;3,24)", 225, Reject),
        (TwoLevel, "(1,9;3,80)", 729, Pass),
        (TwoLevel, "(1,27;3,144)", 1323, Reject),
        (SquareDivides, "(1,3;3,16;7,6)", 441, Pass),
        (SquareDivides, "(1,5;5,4)", 105, Reject),
        (SquareDivides, "(1,9)", 9, Pass),
        (PointedDividesIsotypic, "(1,75;5,6)", 225, Pass),
        (PointedDividesIsotypic, "(1,15;3,4;5,24)", 651, Reject),
        (PointedDividesIsotypic, "(1,9;3,48;7,18)", 1323, Pass),
        (PqOrder, "(1,3;3,8;5,6)", 225, Reject),
        (PqOrder, "(1,3;3,16;7,6)", 441, Pass),
        (PqOrder, "(1,3;3,40;11,6)", 1089, Reject),
        (P2Order, "(1,9;3,24;5,18)", 675, Reject),
        (P2Order, "(1,9;3,48;7,18)", 1323, Pass),
        (P2Order, "(1,9;3,24;5,36)", 1125, Inapplicable),
        (PerfectAdjoint, "(1,9;3,24;5,36)", 1125, Reject),
        (PerfectAdjoint, "(1,9;3,24;5,54)", 1575, Reject),
        (PerfectAdjoint, "(1,15;3,40;5,30)", 1125, Pass),
        (RankWindow, "(1,9;3,26)", 243, Reject),
        (RankWindow, "(1,3;3,16;7,6)", 441, Inapplicable),
        (RankWindow, "(1,9;3,48;7,18)", 1323, Inapplicable),
        (KnownPointed, "(1,9;3,134)", 1215, Reject),
        (KnownPointed, "(1,9;3,8;9,20)", 1701, Reject),
        (KnownPointed, "(1,1215)", 1215, Pass),
        (AdjointFeasible, "(1,21;3,14;7,24)", 1323, Reject),
        (AdjointFeasible, "(1,15;3,40;5,30)", 1125, Pass),
        (AdjointFeasible, "(1,27;3,78)", 729, Pass),
        (AdjointShape, "(1,3;3,16;7,24)", 1323, Reject),
        (AdjointShape, "(1,3;3,16;7,6;21,2)", 1323, Reject),
        (AdjointShape, "(1,3;3,16;7,6)", 441, Inapplicable),
        (ModularFactor, "(1,21;3,56;5,42)", 1575, Reject),
        (ModularFactor, "(1,15;3,40;5,30)", 1125, Inapplicable),
        (ModularFactor, "(1,3;3,16;7,6)", 441, Inapplicable),
        (SixthPower, "(1,9;3,8;9,8)", 729, Reject),
        (SixthPower, "(1,9;3,26;9,6)", 729, Reject),
        (SixthPower, "(1,9;3,80)", 729, Inapplicable),
    ];
    for &(id, t, n, want) in cases {
        assert_eq!(status(id, t, n), want, "{} on {t} at {n}", id.key());
    }
}

#[test]
fn dim3_strict_mode_skips_dimension_nine() {
    assert_eq!(
        status_in(F2Mode::Strict, Dim3Divisibility, "(1,9;3,44;9,4)", 729),
        Inapplicable
    );
    assert_eq!(
        status_in(F2Mode::Strict, Dim3Divisibility, "(1,9;3,80)", 729),
        Pass
    );
}

#[test]
fn reject_reasons_name_the_condition() {
    let engine = Engine::default();
    let ctx = engine.context();
    let v = FilterId::AdjointFeasible
        .evaluate(&tv("(1,21;3,14;7,24)"), 1323, &ctx)
        .unwrap();
    assert!(
        v.reason.starts_with("adjoint Diophantine infeasible"),
        "{}",
        v.reason
    );
    let v = FilterId::RankWindow
        .evaluate(&tv("(1,9;3,26)"), 243, &ctx)
        .unwrap();
    assert!(v.reason.contains("rank 35"), "{}", v.reason);
    let v = FilterId::ModularFactor
        .evaluate(&tv("(1,21;3,56;5,42)"), 1575, &ctx)
        .unwrap();
    assert!(
        v.reason.contains("(1,3;3,8;5,6)") && v.reason.contains("225"),
        "{}",
        v.reason
    );
}

#[test]
fn sixth_power_reason_states_the_alignment_case() {
    let engine = Engine::default();
    let ctx = engine.context();
    let forced = SixthPower
        .evaluate(&tv("(1,9;3,8;9,8)"), 729, &ctx)
        .unwrap();
    assert!(forced.reason.contains("by counting"), "{}", forced.reason);
    let assumed = SixthPower
        .evaluate(&tv("(1,9;3,26;9,6)"), 729, &ctx)
        .unwrap();
    assert!(assumed.reason.contains("assumes"), "{}", assumed.reason);
}

#[test]
fn modular_factor_needs_a_handle() {
    let ctx = FilterContext::standalone(F2Mode::Legacy);
    let err = ModularFactor
        .evaluate(&tv("(1,21;3,56;5,42)"), 1575, &ctx)
        .unwrap_err();
    assert!(matches!(err, Error::Config(_)));
    // without a hypothesis the handle is never needed
    let v = ModularFactor
        .evaluate(&tv("(1,3;3,16;7,6)"), 441, &ctx)
        .unwrap();
    assert_eq!(v.status, Inapplicable);
}

#[test]
fn precondition_is_checked() {
    let ctx = FilterContext::standalone(F2Mode::Legacy);
    assert!(matches!(
        Parity.evaluate(&tv("(1,3;3,16;7,6)"), 443, &ctx),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        Parity.evaluate(&tv("(1,2)"), 2, &ctx),
        Err(Error::EvenDimension(2))
    ));
}

#[test]
fn adjoint_helpers() {
    assert_eq!(
        forced_invertible_divisor(&tv("(1,21;3,14;7,24)"), 1323).unwrap(),
        21
    );
    assert_eq!(
        forced_invertible_divisor(&tv("(1,9;3,80)"), 729).unwrap(),
        9
    );
    assert_eq!(
        forced_invertible_divisor(&tv("(1,27;3,78)"), 729).unwrap(),
        1
    );
    assert!(adjoint_candidates(&tv("(1,21;3,14;7,24)"), 1323)
        .unwrap()
        .is_empty());
    assert_eq!(
        adjoint_candidates(&tv("(1,3;3,16;7,24)"), 1323).unwrap(),
        vec![tv("(1,3;3,16;7,6)")]
    );
    assert_eq!(
        adjoint_candidates(&tv("(1,9;3,80)"), 729).unwrap(),
        vec![tv("(1,9;3,8)")]
    );
}

#[test]
fn citations_resolve() {
    for id in FilterId::ALL {
        let engine = Engine::default();
        let v = id.evaluate(&tv("(1,441)"), 441, &engine.context()).unwrap();
        assert_eq!(v.citation, id.citation_key());
        assert!(
            mnsd_core::filters::citation(v.citation).is_some(),
            "{}",
            id.key()
        );
    }
    let rank = mnsd_core::filters::citation(RankWindow.citation_key()).unwrap();
    assert!(rank.statement.contains("either pointed or perfect"));
}
