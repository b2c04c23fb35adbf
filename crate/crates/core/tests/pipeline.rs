use std::collections::BTreeSet;

use mnsd_core::pipeline::{attributions, reference_checksum, reference_types, ScanOptions};
use mnsd_core::{
    compare_reference, enumerate_raw, Engine, EngineConfig, Error, F2Mode, FilterId, Mode, Stage,
    Status, TypeVector, FIXTURE_DIMENSIONS,
};

fn tv(s: &str) -> TypeVector {
    s.parse().unwrap()
}

#[test]
fn fixture_checksum_is_pinned() {
    assert_eq!(
        reference_checksum(),
        "381cb4f6c242690cca1931e52ef127cd2b0bee6d279d7c490747bd3019814e73",
        "data/reference.txt changed"
    );
}

#[test]
fn basic_and_full_match_the_reference_lists() {
    let engine = Engine::default();
    for n in FIXTURE_DIMENSIONS {
        for mode in [Mode::Basic, Mode::Full] {
            let report = engine.classify(n, mode).unwrap();
            let diff = compare_reference(&report).unwrap();
            assert!(diff.is_empty(), "{n} {mode}: {diff:?}");
            assert!(report.unresolved.is_empty(), "{n} {mode}");
        }
    }
}

#[test]
fn report_partitions_the_raw_candidates() {
    let engine = Engine::default();
    for n in FIXTURE_DIMENSIONS {
        let report = engine.classify(n, Mode::Full).unwrap();
        let raw: BTreeSet<TypeVector> = enumerate_raw(n).unwrap().into_iter().collect();
        let mut seen = BTreeSet::new();
        for t in report
            .survivors
            .iter()
            .chain(report.rejections.iter().map(|j| &j.candidate))
            .chain(report.unresolved.iter().map(|j| &j.candidate))
        {
            assert!(seen.insert(t.clone()), "{t} listed twice at {n}");
        }
        assert_eq!(seen, raw, "{n}");
        assert_eq!(report.raw_count, raw.len());
        for j in &report.rejections {
            assert!(j.verdicts.iter().any(|v| v.status == Status::Reject));
        }
        assert!(report.survivors.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn full_survivors_are_a_subset_of_basic() {
    let engine = Engine::default();
    for n in (1..700).step_by(2).chain(FIXTURE_DIMENSIONS) {
        let basic = engine.classify(n, Mode::Basic).unwrap();
        let full = engine.classify(n, Mode::Full).unwrap();
        for t in &full.survivors {
            assert!(basic.survivors.contains(t), "{t} at {n}");
        }
    }
}

#[test]
fn compare_reference_examples() {
    let engine = Engine::default();
    let diff = compare_reference(&engine.classify(1323, Mode::Full).unwrap()).unwrap();
    assert!(diff.is_empty());
    assert_eq!(diff.stage, Stage::Final);

    let diff = compare_reference(&engine.classify(729, Mode::Basic).unwrap()).unwrap();
    assert!(diff.is_empty());
    assert_eq!(diff.stage, Stage::Prefilter);

    let strict = Engine::with_f2_mode(F2Mode::Strict);
    let diff = compare_reference(&strict.classify(729, Mode::Basic).unwrap()).unwrap();
    assert!(diff.missing_from_engine.is_empty());
    assert_eq!(
        diff.extra_in_engine,
        vec![tv("(1,9;3,44;9,4)"), tv("(1,9;3,62;9,2)")]
    );

    let other = engine.classify(441 * 9, Mode::Basic).unwrap();
    assert_eq!(compare_reference(&other), Err(Error::NotFound(3969)));
}

#[test]
fn strict_mode_keeps_the_final_lists() {
    let engine = Engine::with_f2_mode(F2Mode::Strict);
    for n in FIXTURE_DIMENSIONS {
        let report = engine.classify(n, Mode::Full).unwrap();
        let expected = reference_types(n, Stage::Final).unwrap();
        // anything the replay cannot settle must be surfaced, never passed
        assert!(report.survivors.iter().all(|t| expected.contains(t)), "{n}");
        assert!(expected.iter().all(|t| report.survivors.contains(t)), "{n}");
    }
}

#[test]
fn every_excluded_type_is_rejected_by_its_filter() {
    let engine = Engine::default();
    let table = attributions().unwrap();
    assert_eq!(table.len(), 36);
    for a in table {
        let verdicts = engine.explain(a.dimension, &a.candidate).unwrap();
        let hit = verdicts
            .iter()
            .find(|v| v.filter == a.filter)
            .expect("explain covers every filter");
        assert_eq!(
            hit.status,
            Status::Reject,
            "{} at {}: {}",
            a.candidate,
            a.dimension,
            hit.reason
        );
        assert_eq!(hit.citation, a.filter.citation_key());
    }
}

#[test]
fn final_types_are_never_rejected() {
    for mode in [F2Mode::Legacy, F2Mode::Strict] {
        let engine = Engine::with_f2_mode(mode);
        for n in FIXTURE_DIMENSIONS {
            for t in reference_types(n, Stage::Final).unwrap() {
                for v in engine.explain(n, t).unwrap() {
                    assert!(
                        matches!(v.status, Status::Pass | Status::Inapplicable),
                        "{} {:?} on {t} at {n}: {}",
                        v.filter.key(),
                        v.status,
                        v.reason
                    );
                }
            }
        }
    }
}

#[test]
fn explain_examples() {
    let engine = Engine::default();
    let v = engine.explain(243, &tv("(1,9;3,26)")).unwrap();
    let f13 = v.iter().find(|v| v.filter == FilterId::RankWindow).unwrap();
    assert_eq!(f13.status, Status::Reject);
    let statement = mnsd_core::filters::citation(f13.citation)
        .unwrap()
        .statement;
    assert!(statement.contains("either pointed or perfect"));

    let v = engine.explain(1323, &tv("(1,21;3,14;7,24)")).unwrap();
    assert!(v.iter().any(|v| v.filter == FilterId::AdjointFeasible
        && v.status == Status::Reject
        && v.reason.contains("adjoint Diophantine infeasible")));

    let v = engine.explain(441, &tv("(1,3;3,16;7,6)")).unwrap();
    assert!(v.iter().all(|v| v.status != Status::Reject));

    assert!(matches!(
        engine.explain(441, &tv("(1,9;3,80)")),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn exhaustive_mode_lists_every_rejecting_filter() {
    let engine = Engine::new(EngineConfig {
        exhaustive: true,
        ..EngineConfig::default()
    });
    let report = engine.classify(243, Mode::Full).unwrap();
    let j = report.rejection_of(&tv("(1,9;3,26)")).unwrap();
    let keys: Vec<&str> = j.verdicts.iter().map(|v| v.filter.key()).collect();
    assert_eq!(keys, vec!["f13", "f14"]);

    let quick = Engine::default().classify(243, Mode::Full).unwrap();
    assert_eq!(
        quick
            .rejection_of(&tv("(1,9;3,26)"))
            .unwrap()
            .verdicts
            .len(),
        1
    );
}

#[test]
fn memoized_and_fresh_scans_agree() {
    let memo = Engine::default();
    let fresh = Engine::new(EngineConfig {
        memoize: false,
        ..EngineConfig::default()
    });
    for shortcut in [true, false] {
        let opts = ScanOptions {
            mode: Mode::Full,
            shortcut,
        };
        let a = memo.scan(800, opts).unwrap();
        let b = fresh.scan(800, opts).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert!(x.same_outcome(y), "{}", x.dimension);
        }
    }
}

#[test]
fn scan_headlines() {
    let engine = Engine::default();
    let reports = engine.scan(2025, ScanOptions::default()).unwrap();
    assert_eq!(reports.len(), 1012);
    assert!(reports.windows(2).all(|w| w[0].dimension < w[1].dimension));
    let slow: Vec<u64> = reports
        .iter()
        .filter(|r| r.shortcut.is_none())
        .map(|r| r.dimension)
        .collect();
    assert_eq!(slow, FIXTURE_DIMENSIONS);
    let non_pointed: Vec<u64> = reports
        .iter()
        .filter(|r| r.non_pointed_survivors().next().is_some())
        .map(|r| r.dimension)
        .collect();
    assert_eq!(non_pointed, vec![441, 729, 1125, 1323, 1521]);
    assert!(reports.iter().all(|r| r.unresolved.is_empty()));
}

#[test]
fn even_and_zero_dimensions_are_refused() {
    let engine = Engine::default();
    assert_eq!(
        engine.classify(2024, Mode::Full).unwrap_err(),
        Error::EvenDimension(2024)
    );
    assert!(matches!(
        engine.classify(0, Mode::Basic),
        Err(Error::InvalidInput(_))
    ));
    assert!(engine.scan(0, ScanOptions::default()).is_err());
    assert_eq!(engine.scan(1, ScanOptions::default()).unwrap().len(), 0);
}
