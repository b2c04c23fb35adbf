//! Filters that replay structural arguments: prime-order constraints on the
//! pointed part, rank windows, dimensions known to be pointed, the adjoint
//! shape restriction and the Müger factorization.

use num_integer::Integer;

use super::adjoint::{candidates, list};
use super::{FilterContext, Finding, Subject};
use crate::arith::{divides, is_prime, is_prime_power};
use crate::error::{Error, Result};
use crate::FactoredInt;

/// Primes `q != p` that can play the role of `q` in `N = p^a q^b d` with
/// `1 <= b <= 4` and `d` square-free and prime to `pq`.
fn partner_primes(fac: &FactoredInt, p: u64) -> Vec<u64> {
    fac.factors()
        .iter()
        .filter(|&&(q, b)| q != p && (1..=4).contains(&b) && fac.square_free_apart_from(&[p, q]))
        .map(|&(q, _)| q)
        .collect()
}

pub(super) struct PrimePair {
    p: u64,
    qs: Vec<u64>,
}

pub(super) fn pq_hypothesis(s: &Subject<'_>) -> Option<PrimePair> {
    let p = s.t.invertibles();
    if !is_prime(p) || p == 2 || !(2..=3).contains(&s.fac.exponent_of(p)) {
        return None;
    }
    let qs = partner_primes(s.fac, p);
    (!qs.is_empty()).then_some(PrimePair { p, qs })
}

pub(super) fn pq_order(s: &Subject<'_>, h: PrimePair) -> Finding {
    let p = h.p;
    let bad: Vec<u64> =
        h.qs.iter()
            .copied()
            .filter(|&q| !divides(p, q - 1) && !divides(q, p - 1))
            .collect();
    match bad.first() {
        Some(&q) => Finding::Reject(format!(
            "N = {} with |G(C)| = {p}: neither {p} | {q}-1 nor {q} | {p}-1",
            s.fac
        )),
        None => Finding::Pass(format!("|G(C)| = {p} is compatible with q in {:?}", h.qs)),
    }
}

pub(super) fn p2_hypothesis(s: &Subject<'_>) -> Option<PrimePair> {
    let (p, 2) = is_prime_power(s.t.invertibles())? else {
        return None;
    };
    if p == 2 || s.fac.exponent_of(p) != 3 {
        return None;
    }
    let qs: Vec<u64> = partner_primes(s.fac, p)
        .into_iter()
        .filter(|&q| q > p)
        .collect();
    (!qs.is_empty()).then_some(PrimePair { p, qs })
}

pub(super) fn p2_order(s: &Subject<'_>, h: PrimePair) -> Finding {
    let p = h.p;
    match h.qs.iter().find(|&&q| !divides(p, q - 1)) {
        Some(&q) => Finding::Reject(format!(
            "N = {} with |G(C)| = {p}^2: {p} does not divide {q}-1",
            s.fac
        )),
        None => Finding::Pass(format!("{p} divides q-1 for q in {:?}", h.qs)),
    }
}

/// `N / n_1` when it exceeds one.
pub(super) fn perfect_adjoint_hypothesis(s: &Subject<'_>) -> Option<u64> {
    let n1 = s.t.invertibles();
    (divides(n1, s.n) && s.n / n1 > 1).then(|| s.n / n1)
}

pub(super) fn perfect_adjoint(s: &Subject<'_>, cofactor: u64) -> Finding {
    let n1 = s.t.invertibles();
    let g = n1.gcd(&cofactor);
    if g == 1 {
        Finding::Reject(format!(
            "gcd(n_1, N/n_1) = gcd({n1}, {cofactor}) = 1: the adjoint subcategory has no room \
             for a non-trivial invertible object"
        ))
    } else {
        Finding::Pass(format!("gcd({n1}, {cofactor}) = {g}"))
    }
}

pub(super) fn rank_window_hypothesis(s: &Subject<'_>) -> bool {
    let r = s.t.rank();
    (27..=49).contains(&r) && r % 8 != 1
}

pub(super) fn rank_window(s: &Subject<'_>) -> Finding {
    let r = s.t.rank();
    if !s.t.is_pointed() && s.t.invertibles() > 1 {
        Finding::Reject(format!(
            "rank {r} lies in [27,49] with rank != 1 mod 8, so C is either pointed or perfect; \
             this type is neither"
        ))
    } else {
        Finding::Pass(format!("rank {r}: type is pointed or perfect"))
    }
}

/// Dimension shapes whose modular categories are all pointed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnownPointed {
    /// `q^n d`, `n <= 4`, `d` square-free and prime to `q`.
    PrimePowerTimesSquareFree,
    /// `3^5 d`, `d` square-free and prime to 3.
    ThreeToTheFifth,
}

pub fn known_pointed_shape(fac: &FactoredInt) -> Option<KnownPointed> {
    let mut high = fac.factors().iter().filter(|&&(_, e)| e > 1);
    match (high.next(), high.next()) {
        (None, _) => Some(KnownPointed::PrimePowerTimesSquareFree),
        (Some(&(_, e)), None) if e <= 4 => Some(KnownPointed::PrimePowerTimesSquareFree),
        (Some(&(3, 5)), None) => Some(KnownPointed::ThreeToTheFifth),
        _ => None,
    }
}

pub(super) fn known_pointed(s: &Subject<'_>, k: KnownPointed) -> Finding {
    let shape = match k {
        KnownPointed::PrimePowerTimesSquareFree => "q^n d with n <= 4",
        KnownPointed::ThreeToTheFifth => "3^5 d",
    };
    if s.t.is_pointed() {
        Finding::Pass(format!("N = {} has shape {shape}; type is pointed", s.fac))
    } else {
        Finding::Reject(format!(
            "N = {} has shape {shape}, so every modular category of this dimension is pointed",
            s.fac
        ))
    }
}

pub(super) fn adjoint_shape_hypothesis(s: &Subject<'_>) -> Option<PrimePair> {
    let p = s.t.invertibles();
    if !is_prime(p) || p == 2 {
        return None;
    }
    let n2 = s.t.count_of(p)?;
    if n2 % p == 0 {
        return None;
    }
    let e = s.fac.exponent_of(p);
    let qs: Vec<u64> =
        s.t.dims()
            .filter(|&q| q != p && is_prime(q))
            .filter(|&q| {
                let cubic = e == 3
                    && (1..=4).contains(&s.fac.exponent_of(q))
                    && s.fac.square_free_apart_from(&[p, q]);
                let power = (1..=6).contains(&e) && s.fac.square_free_apart_from(&[p]);
                cubic || power
            })
            .collect();
    (!qs.is_empty()).then_some(PrimePair { p, qs })
}

pub(super) fn adjoint_shape(s: &Subject<'_>, h: PrimePair) -> Finding {
    let p = h.p;
    let cands = candidates(s.t, s.n);
    let (forbidden, allowed): (Vec<_>, Vec<_>) = cands.into_iter().partition(|c| {
        c.invertibles() == p
            && c.count_of(p).is_some()
            && h.qs.iter().any(|&q| c.count_of(q).is_some())
    });
    if allowed.is_empty() {
        let shown = if forbidden.is_empty() {
            "none".to_string()
        } else {
            list(&forbidden)
        };
        Finding::Reject(format!(
            "every adjoint candidate ({shown}) has the excluded shape (1,{p};{p},*;q,*) \
             for q in {:?}",
            h.qs
        ))
    } else {
        Finding::Pass(format!("adjoint may have type {}", list(&allowed)))
    }
}

/// Primes `r | n_1` with `r^2` not dividing `N`.
pub(super) fn modular_factor_hypothesis(s: &Subject<'_>) -> Option<Vec<u64>> {
    let n1 = s.t.invertibles();
    let rs: Vec<u64> = s
        .fac
        .factors()
        .iter()
        .filter(|&&(r, e)| e == 1 && divides(r, n1))
        .map(|&(r, _)| r)
        .collect();
    (!rs.is_empty()).then_some(rs)
}

pub(super) fn modular_factor(
    s: &Subject<'_>,
    rs: &[u64],
    ctx: &FilterContext<'_>,
) -> Result<Finding> {
    let handle = ctx.handle()?;
    let mut notes = Vec::new();
    let mut inconclusive = None;
    for &r in rs {
        let Some(quotient) = s.t.divide_pointwise(r) else {
            return Ok(Finding::Reject(format!(
                "{r} exactly divides N, so a pointed subcategory of dimension {r} is a modular \
                 factor, but the counts of {} are not all divisible by {r}",
                s.t
            )));
        };
        let sub = s.n / r;
        if sub >= s.n {
            return Err(Error::Internal(format!(
                "recursion from {} to {sub} does not descend",
                s.n
            )));
        }
        let report = handle.classify_full(sub)?;
        if report.survivors.contains(&quotient) {
            notes.push(format!("{quotient} survives at {sub}"));
        } else if report.unresolved.iter().any(|u| u.candidate == quotient) {
            inconclusive.get_or_insert(format!(
                "quotient {quotient} by the modular factor of dimension {r} is unresolved at {sub}"
            ));
        } else {
            return Ok(Finding::Reject(format!(
                "{r} exactly divides N, so C = D x D' with D pointed of dimension {r}; \
                 the factor D' would have type {quotient}, which is excluded at {sub}"
            )));
        }
    }
    Ok(match inconclusive {
        Some(reason) => Finding::Inconclusive(reason),
        None => Finding::Pass(notes.join("; ")),
    })
}
