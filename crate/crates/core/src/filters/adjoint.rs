//! Adjoint-subcategory feasibility.
//!
//! The universal grading of a modular category has `n_1` components, so the
//! adjoint subcategory (the trivial component) has dimension `N / n_1`. Its
//! type uses the simple dimensions of the parent, with at most as many
//! objects of each, an even count of each non-invertible dimension, and an
//! invertible count dividing `n_1`.

use super::{check_precondition, Finding, Subject};
use crate::arith::{divides, divisors, factorize};
use crate::error::Result;
use crate::typevec::{Entry, TypeVector};

/// Lower bound on the invertible count of any adjoint type: the product of
/// `p^t` over primes with `p^t || n_1` for which some `n_i` (`i >= 2`) is
/// prime to `p`. Such a `p`-subgroup fixes a simple object and therefore sits
/// inside the adjoint subcategory.
pub fn forced_invertible_divisor(t: &TypeVector, n: u64) -> Result<u64> {
    check_precondition(t, n)?;
    Ok(forced_divisor(t))
}

/// Every arithmetically possible type of the adjoint subcategory, sorted
/// canonically.
pub fn adjoint_candidates(t: &TypeVector, n: u64) -> Result<Vec<TypeVector>> {
    check_precondition(t, n)?;
    Ok(candidates(t, n))
}

pub(crate) fn forced_divisor(t: &TypeVector) -> u64 {
    let fac = factorize(t.invertibles()).expect("type counts are positive");
    fac.factors()
        .iter()
        .filter(|&&(p, _)| t.non_invertible().iter().any(|e| e.count % p != 0))
        .map(|&(p, e)| p.pow(e))
        .product()
}

pub(crate) fn candidates(t: &TypeVector, n: u64) -> Vec<TypeVector> {
    let n1 = t.invertibles();
    if !divides(n1, n) {
        return Vec::new();
    }
    let target = n / n1;
    let forced = forced_divisor(t);
    let slots: Vec<Entry> = t
        .non_invertible()
        .iter()
        .copied()
        .filter(|e| e.dim.saturating_mul(e.dim) < target)
        .collect();

    let mut out = Vec::new();
    let mut picked = Vec::new();
    for a in divisors(n1).expect("n_1 is positive") {
        if a > target || !divides(forced, a) {
            continue;
        }
        fill(&slots, target - a, &mut picked, &mut |chosen| {
            let mut entries = vec![Entry::new(1, a)];
            entries.extend_from_slice(chosen);
            out.push(TypeVector::new(entries).expect("adjoint entries ascend"));
        });
    }
    out.sort();
    out
}

/// Distributes `rest` over `slots` with even counts `0 <= x <= slot.count`.
fn fill(slots: &[Entry], rest: u64, picked: &mut Vec<Entry>, emit: &mut dyn FnMut(&[Entry])) {
    let Some((slot, tail)) = slots.split_first() else {
        if rest == 0 {
            emit(picked);
        }
        return;
    };
    let sq = slot.dim * slot.dim;
    fill(tail, rest, picked, emit);
    let mut x = 2;
    while x <= slot.count && x * sq <= rest {
        picked.push(Entry::new(slot.dim, x));
        fill(tail, rest - x * sq, picked, emit);
        picked.pop();
        x += 2;
    }
}

pub(super) fn feasible_hypothesis(s: &Subject<'_>) -> bool {
    !s.t.is_pointed() && divides(s.t.invertibles(), s.n)
}

pub(super) fn feasible(s: &Subject<'_>) -> Finding {
    let cands = candidates(s.t, s.n);
    let target = s.n / s.t.invertibles();
    if cands.is_empty() {
        return Finding::Reject(format!(
            "adjoint Diophantine infeasible: no type (1,a;...) of dimension {target} with a | {}, \
             {} | a and even counts bounded by {}",
            s.t.invertibles(),
            forced_divisor(s.t),
            s.t
        ));
    }
    Finding::Pass(format!(
        "adjoint of dimension {target} may have type {}",
        list(&cands)
    ))
}

pub(super) fn list(types: &[TypeVector]) -> String {
    types
        .iter()
        .map(TypeVector::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
