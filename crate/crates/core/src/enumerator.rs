//! Raw candidate generation.
//!
//! A raw candidate for dimension `N` is a type `(1,n_1;d_2,n_2;...)` with
//! `sum n_i d_i^2 = N`, all `d_i` odd and strictly ascending, every `n_i`
//! with `i >= 2` even and at least 2, and `n_1 | N`. The search takes the
//! largest dimension first and lets `n_1` absorb whatever remains.

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::filters::{FilterContext, FilterId, FilterVerdict, Status};
use crate::typevec::{Entry, TypeVector};

pub fn enumerate_raw(n: u64) -> Result<Vec<TypeVector>> {
    check_odd(n)?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let top = n.sqrt() | 1;
    descend(n, n, top + 2, &mut stack, &mut out);
    out.sort();
    debug_assert!(out.iter().all(|t| t.fpdim() == n));
    Ok(out)
}

/// `stack` holds the chosen entries in descending dimension; every
/// dimension tried next is odd and below `below`.
fn descend(n: u64, rest: u64, below: u64, stack: &mut Vec<Entry>, out: &mut Vec<TypeVector>) {
    if n.is_multiple_of(rest) {
        let mut entries = Vec::with_capacity(stack.len() + 1);
        entries.push(Entry::new(1, rest));
        entries.extend(stack.iter().rev());
        out.push(TypeVector::new(entries).expect("generated entries ascend"));
    }
    let mut d = below - 2;
    while d >= 3 {
        let sq = d * d;
        // leave at least one invertible
        let mut count = 2;
        while count * sq < rest {
            stack.push(Entry::new(d, count));
            descend(n, rest - count * sq, d, stack, out);
            stack.pop();
            count += 2;
        }
        d -= 2;
    }
}

pub(crate) fn check_odd(n: u64) -> Result<()> {
    match n {
        0 => Err(Error::InvalidInput("dimension must be positive".into())),
        n if n % 2 == 0 => Err(Error::EvenDimension(n)),
        _ => Ok(()),
    }
}

/// A candidate together with the verdicts that decided it.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Judged {
    #[serde(rename = "type")]
    pub candidate: TypeVector,
    pub verdicts: Vec<FilterVerdict>,
}

/// Raw candidates split by a filter run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Partition {
    pub raw_count: usize,
    pub survivors: Vec<TypeVector>,
    /// Each with every rejecting verdict (or only the first, under early exit).
    pub rejections: Vec<Judged>,
    /// Not rejected, but some filter was inconclusive.
    pub unresolved: Vec<Judged>,
}

/// Runs `filters`, in the given order, over every raw candidate of `n`,
/// keeping every rejecting verdict.
pub fn enumerate_with(n: u64, filters: &[FilterId], ctx: &FilterContext<'_>) -> Result<Partition> {
    partition(n, filters, ctx, false)
}

pub(crate) fn partition(
    n: u64,
    filters: &[FilterId],
    ctx: &FilterContext<'_>,
    early_exit: bool,
) -> Result<Partition> {
    let raw = enumerate_raw(n)?;
    let fac = crate::arith::factorize(n)?;
    let mut part = Partition {
        raw_count: raw.len(),
        ..Partition::default()
    };
    for t in raw {
        let subject = crate::filters::Subject {
            t: &t,
            n,
            fac: &fac,
        };
        let mut rejects = Vec::new();
        let mut doubts = Vec::new();
        for &id in filters {
            let v = id.evaluate_subject(&subject, ctx)?;
            match v.status {
                Status::Reject => {
                    rejects.push(v);
                    if early_exit {
                        break;
                    }
                }
                Status::Inconclusive => doubts.push(v),
                Status::Pass | Status::Inapplicable => {}
            }
        }
        if !rejects.is_empty() {
            part.rejections.push(Judged {
                candidate: t,
                verdicts: rejects,
            });
        } else if !doubts.is_empty() {
            part.unresolved.push(Judged {
                candidate: t,
                verdicts: doubts,
            });
        } else {
            part.survivors.push(t);
        }
    }
    Ok(part)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn types(list: &[&str]) -> Vec<TypeVector> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(enumerate_raw(1).unwrap(), types(&["(1,1)"]));
        assert_eq!(enumerate_raw(9).unwrap(), types(&["(1,9)"]));
        assert_eq!(enumerate_raw(27).unwrap(), types(&["(1,9;3,2)", "(1,27)"]));
    }

    #[test]
    fn dimension_441_contains_the_known_types() {
        let raw = enumerate_raw(441).unwrap();
        assert!(raw.contains(&"(1,3;3,16;7,6)".parse().unwrap()));
        assert!(raw.contains(&"(1,441)".parse().unwrap()));
        assert!(raw.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn bad_dimensions() {
        assert_eq!(enumerate_raw(442), Err(Error::EvenDimension(442)));
        assert!(matches!(enumerate_raw(0), Err(Error::InvalidInput(_))));
    }
}
