//! Slow restatements used to cross-check the enumerator and the arithmetic
//! filters. Nothing here calls into the enumerator or the filter code.

use crate::arith::{divides, is_prime, p_part};
use crate::error::{Error, Result};
use crate::filters::{FilterId, Status};
use crate::typevec::{Entry, TypeVector};

/// Every raw candidate of dimension `n`, found by trying all even counts for
/// every odd dimension up to `sqrt(n)` in turn.
pub fn oracle_enumerate(n: u64) -> Result<Vec<TypeVector>> {
    if n == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenDimension(n));
    }
    let mut dims = Vec::new();
    let mut d = 3;
    while d * d <= n {
        dims.push(d);
        d += 2;
    }
    let mut found = Vec::new();
    let mut counts = vec![0u64; dims.len()];
    loop {
        let used: u64 = dims.iter().zip(&counts).map(|(d, c)| c * d * d).sum();
        if n.is_multiple_of(n - used) {
            let mut entries = vec![Entry::new(1, n - used)];
            for (&d, &c) in dims.iter().zip(&counts) {
                if c > 0 {
                    entries.push(Entry::new(d, c));
                }
            }
            found.push(TypeVector::new(entries)?);
        }
        // odometer over even counts, smallest dimension fastest, keeping at
        // least one invertible
        let mut i = 0;
        loop {
            if i == dims.len() {
                found.sort_by_key(|t| {
                    let key: Vec<(u64, u64)> =
                        t.entries().iter().map(|e| (e.dim, e.count)).collect();
                    (t.rank(), key)
                });
                return Ok(found);
            }
            counts[i] += 2;
            let used: u64 = dims.iter().zip(&counts).map(|(d, c)| c * d * d).sum();
            if used < n {
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}

/// Recomputes the status of an arithmetic filter from its statement. The
/// dimension-3 filter is restated in its strict form.
pub fn oracle_check(t: &TypeVector, n: u64, filter: FilterId) -> Result<Status> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenDimension(n));
    }
    let pairs: Vec<(u64, u64)> = t.entries().iter().map(|e| (e.dim, e.count)).collect();
    let total: u64 = pairs.iter().map(|&(d, c)| c * d * d).sum();
    if total != n {
        return Err(Error::InvalidInput(format!(
            "{t} has dimension {total}, not {n}"
        )));
    }
    let n1 = pairs[0].1;
    let rest = &pairs[1..];
    let verdict = |ok: bool| if ok { Status::Pass } else { Status::Reject };
    Ok(match filter {
        FilterId::Parity => {
            verdict(pairs.iter().all(|&(d, _)| d % 2 == 1) && rest.iter().all(|&(_, c)| c % 2 == 0))
        }
        FilterId::Dim3Divisibility => match rest.first() {
            Some(&(3, n2)) if !pairs.iter().any(|&(d, _)| d == 9) => {
                verdict(divides(n1 + 9 * n2, n))
            }
            _ => Status::Inapplicable,
        },
        FilterId::StabilizerPower => {
            let mut ok = true;
            for p in (2..=n1).filter(|&p| is_prime(p) && divides(p, n1)) {
                let (t_exp, _) = p_part(n1, p)?;
                if rest.iter().any(|&(_, c)| c % p != 0) {
                    ok &= divides(p.pow(2 * t_exp), n);
                }
            }
            verdict(ok)
        }
        FilterId::GradingBound => {
            let top = pairs.iter().map(|&(d, _)| d).max().unwrap_or(1);
            verdict(n1 * top * top <= n)
        }
        FilterId::TwoLevel => match pairs[..] {
            [(1, small), (d, m)] => {
                let block = d * d * small;
                verdict((divides(small, m) || divides(block, n)) && block != n)
            }
            _ => Status::Inapplicable,
        },
        FilterId::SquareDivides => verdict(pairs.iter().all(|&(d, _)| divides(d * d, n))),
        FilterId::PointedDividesIsotypic => {
            verdict(pairs.iter().all(|&(d, c)| divides(n1, c * d * d)))
        }
        other => return Err(Error::NotSupported(other.name().to_string())),
    })
}
