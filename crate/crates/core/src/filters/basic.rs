//! Filters that only look at the type's statistics: parity, divisibility and
//! the universal-grading bounds.

use super::{F2Mode, Finding, Subject};
use crate::arith::{divides, factorize};

pub(super) fn structural(s: &Subject<'_>) -> Finding {
    let n1 = s.t.invertibles();
    if !divides(n1, s.n) {
        return Finding::Reject(format!(
            "n_1 = {n1} does not divide N = {}; the pointed part is a fusion subcategory",
            s.n
        ));
    }
    if s.n > 1 && n1 == 1 {
        return Finding::Reject(format!(
            "n_1 = 1 at N = {} > 1; a solvable non-trivial category has non-trivial invertibles",
            s.n
        ));
    }
    Finding::Pass(format!("n_1 = {n1} divides N = {}", s.n))
}

pub(super) fn parity(s: &Subject<'_>) -> Finding {
    if let Some(e) = s.t.entries().iter().find(|e| e.dim % 2 == 0) {
        return Finding::Reject(format!("dimension {} is even", e.dim));
    }
    if let Some(e) = s.t.non_invertible().iter().find(|e| e.count % 2 == 1) {
        return Finding::Reject(format!(
            "{} simple objects of dimension {}: an odd count cannot pair into duals",
            e.count, e.dim
        ));
    }
    Finding::Pass("all dimensions odd and all non-invertible counts even".into())
}

/// `(n_1, n_2)` when `d_2 = 3` and the mode allows it.
pub(super) fn dim3_hypothesis(s: &Subject<'_>, mode: F2Mode) -> Option<(u64, u64)> {
    let second = s.t.entries().get(1)?;
    if second.dim != 3 {
        return None;
    }
    if mode == F2Mode::Strict && s.t.count_of(9).is_some() {
        return None;
    }
    Some((s.t.invertibles(), second.count))
}

pub(super) fn dim3(s: &Subject<'_>, (n1, n2): (u64, u64)) -> Finding {
    let sub = u128::from(n1) + 9 * u128::from(n2);
    if u128::from(s.n) % sub == 0 {
        Finding::Pass(format!(
            "n_1 + 9 n_2 = {n1} + 9*{n2} = {sub} divides {}",
            s.n
        ))
    } else {
        Finding::Reject(format!(
            "n_1 + 9 n_2 = {n1} + 9*{n2} = {sub} does not divide {}",
            s.n
        ))
    }
}

pub(super) fn stabilizer_power(s: &Subject<'_>) -> Finding {
    let n1 = s.t.invertibles();
    let fac = factorize(n1).expect("type counts are positive");
    let mut required = Vec::new();
    for &(p, t) in fac.factors() {
        let Some(free) = s.t.non_invertible().iter().find(|e| e.count % p != 0) else {
            continue;
        };
        let p2t = u128::from(p).pow(2 * t);
        if u128::from(s.n) % p2t != 0 {
            return Finding::Reject(format!(
                "{p}^{t} exactly divides n_1 = {n1} and n = {} (dimension {}) is prime to {p}, \
                 but {p}^{} = {p2t} does not divide {}",
                free.count,
                free.dim,
                2 * t,
                s.n
            ));
        }
        required.push(format!("{p}^{}", 2 * t));
    }
    if required.is_empty() {
        Finding::Pass("no prime of n_1 is forced into a stabilizer".into())
    } else {
        Finding::Pass(format!("{} divides {}", required.join(", "), s.n))
    }
}

pub(super) fn grading_bound(s: &Subject<'_>) -> Finding {
    let n1 = u128::from(s.t.invertibles());
    let d = u128::from(s.t.max_dim());
    let bound = n1 * d * d;
    if bound > u128::from(s.n) {
        Finding::Reject(format!(
            "n_1 d^2 = {n1}*{d}^2 = {bound} exceeds N = {}",
            s.n
        ))
    } else {
        Finding::Pass(format!("n_1 d^2 = {bound} <= {}", s.n))
    }
}

/// `(n, d, m)` for a type `(1,n;d,m)`.
pub(super) fn two_level_hypothesis(s: &Subject<'_>) -> Option<(u64, u64, u64)> {
    match s.t.entries() {
        [one, e] => Some((one.count, e.dim, e.count)),
        _ => None,
    }
}

pub(super) fn two_level(s: &Subject<'_>, (n, d, m): (u64, u64, u64)) -> Finding {
    let d2n = u128::from(d) * u128::from(d) * u128::from(n);
    let big_n = u128::from(s.n);
    if d2n == big_n {
        return Finding::Reject(format!(
            "d^2 n = {d}^2*{n} equals N; an integral two-level type needs d^2 n < N"
        ));
    }
    let n_divides_m = m % n == 0;
    let d2n_divides = big_n % d2n == 0;
    if !n_divides_m && !d2n_divides {
        return Finding::Reject(format!(
            "n = {n} does not divide m = {m} and d^2 n = {d2n} does not divide {}",
            s.n
        ));
    }
    if n_divides_m {
        Finding::Pass(format!("n = {n} divides m = {m}; d^2 n = {d2n} < {}", s.n))
    } else {
        Finding::Pass(format!("d^2 n = {d2n} divides and is below {}", s.n))
    }
}

pub(super) fn square_divides(s: &Subject<'_>) -> Finding {
    for e in s.t.non_invertible() {
        let sq = u128::from(e.dim) * u128::from(e.dim);
        if u128::from(s.n) % sq != 0 {
            return Finding::Reject(format!("{}^2 = {sq} does not divide {}", e.dim, s.n));
        }
    }
    Finding::Pass("every d_i^2 divides N".into())
}

pub(super) fn pointed_divides_isotypic(s: &Subject<'_>) -> Finding {
    let n1 = u128::from(s.t.invertibles());
    for e in s.t.non_invertible() {
        let w = u128::from(e.count) * u128::from(e.dim) * u128::from(e.dim);
        if w % n1 != 0 {
            return Finding::Reject(format!(
                "n_1 = {n1} does not divide n d^2 = {}*{}^2 = {w}",
                e.count, e.dim
            ));
        }
    }
    Finding::Pass(format!("n_1 = {n1} divides every n_i d_i^2"))
}
