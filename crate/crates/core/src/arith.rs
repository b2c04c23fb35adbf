//! Exact integer number theory: factorization, divisors, p-parts and the
//! shape predicates the filters are phrased in.
//!
//! Everything is generic over the unsigned primitive integers; the engine
//! itself runs on `u64` (see [`crate::FactoredInt`]). Factorization is plain
//! trial division, which is ample for dimensions in the low millions.

use std::fmt;

use num_integer::Integer;
use num_traits::{PrimInt, Unsigned};
use serde::Serialize;

use crate::error::{Error, Result};

/// Scalar bound for the arithmetic routines.
pub trait Natural: PrimInt + Unsigned + Integer + fmt::Display + fmt::Debug {}

impl<T> Natural for T where T: PrimInt + Unsigned + Integer + fmt::Display + fmt::Debug {}

fn two<T: Natural>() -> T {
    T::one() + T::one()
}

/// A positive integer with its prime factorization, primes ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Factored<T: Natural> {
    value: T,
    factors: Vec<(T, u32)>,
}

impl<T: Natural> Factored<T> {
    pub fn value(&self) -> T {
        self.value
    }

    /// `(prime, exponent)` pairs, primes strictly ascending.
    pub fn factors(&self) -> &[(T, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = T> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the value; zero when `p` does not divide it.
    pub fn exponent_of(&self, p: T) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Number of positive divisors.
    pub fn divisor_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(_, e)| u64::from(e) + 1)
            .product()
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// True when every prime other than those in `except` occurs to the
    /// first power.
    pub fn square_free_apart_from(&self, except: &[T]) -> bool {
        self.factors
            .iter()
            .all(|&(p, e)| e == 1 || except.contains(&p))
    }

    /// Multiplies the factorization back out.
    pub fn product(&self) -> T {
        self.factors
            .iter()
            .fold(T::one(), |acc, &(p, e)| acc * p.pow(e))
    }
}

impl<T: Natural> fmt::Display for Factored<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn factorize<T: Natural>(n: T) -> Result<Factored<T>> {
    if n.is_zero() {
        return Err(Error::InvalidInput("cannot factorize 0".into()));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = two::<T>();
    while p <= rest / p {
        if (rest % p).is_zero() {
            let mut e = 0u32;
            while (rest % p).is_zero() {
                rest = rest / p;
                e += 1;
            }
            factors.push((p, e));
        }
        p = if p == two() { p + T::one() } else { p + two() };
    }
    if rest > T::one() {
        factors.push((rest, 1));
    }
    Ok(Factored { value: n, factors })
}

pub fn is_prime<T: Natural>(n: T) -> bool {
    if n < two() {
        return false;
    }
    let mut d = two::<T>();
    while d <= n / d {
        if (n % d).is_zero() {
            return false;
        }
        d = d + T::one();
    }
    true
}

/// All positive divisors of `n`, ascending.
pub fn divisors<T: Natural>(n: T) -> Result<Vec<T>> {
    let f = factorize(n)?;
    let mut out = vec![T::one()];
    for &(p, e) in f.factors() {
        let len = out.len();
        let mut pk = T::one();
        for _ in 0..e {
            pk = pk * p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The exact power of the prime `p` dividing `n`, as `(t, p^t)`.
pub fn p_part<T: Natural>(n: T, p: T) -> Result<(u32, T)> {
    if n.is_zero() {
        return Err(Error::InvalidInput("p-part of 0 is undefined".into()));
    }
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let mut t = 0;
    let mut pt = T::one();
    let mut rest = n;
    while (rest % p).is_zero() {
        rest = rest / p;
        pt = pt * p;
        t += 1;
    }
    Ok((t, pt))
}

pub fn is_square_free<T: Natural>(n: T) -> bool {
    factorize(n).map(|f| f.is_square_free()).unwrap_or(false)
}

/// `Some((p, k))` when `n = p^k` with `k >= 1`. One is not a prime power.
pub fn is_prime_power<T: Natural>(n: T) -> Option<(T, u32)> {
    let f = factorize(n).ok()?;
    match f.factors() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// True when `d` divides `n`; zero divides nothing.
pub fn divides<T: Natural>(d: T, n: T) -> bool {
    !d.is_zero() && (n % d).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        let f = factorize(441u64).unwrap();
        assert_eq!(f.factors(), &[(3, 2), (7, 2)]);
        assert!(factorize(1u64).unwrap().factors().is_empty());
        assert_eq!(
            factorize(1575u64).unwrap().factors(),
            &[(3, 2), (5, 2), (7, 1)]
        );
        assert_eq!(factorize(1323u32).unwrap().to_string(), "3^3*7^2");
        assert!(matches!(factorize(0u64), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn factorize_large_prime_and_u128() {
        assert_eq!(factorize(999_983u64).unwrap().factors(), &[(999_983, 1)]);
        let f = factorize(2u128.pow(20) * 3).unwrap();
        assert_eq!(f.factors(), &[(2, 20), (3, 1)]);
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(9u64).unwrap(), vec![1, 3, 9]);
        assert_eq!(divisors(7u64).unwrap(), vec![1, 7]);
        // trial-division oracle
        let brute: Vec<u64> = (1..=225).filter(|d| 225 % d == 0).collect();
        assert_eq!(brute, vec![1, 3, 5, 9, 15, 25, 45, 75, 225]);
        assert_eq!(divisors(225u64).unwrap(), brute);
    }

    #[test]
    fn p_part_examples() {
        assert_eq!(p_part(1323u64, 3).unwrap(), (3, 27));
        assert_eq!(p_part(10u64, 3).unwrap(), (0, 1));
        assert_eq!(p_part(729u64, 3).unwrap(), (6, 729));
        assert!(p_part(10u64, 4).is_err());
        assert!(p_part(0u64, 3).is_err());
    }

    #[test]
    fn shape_predicates() {
        assert!(is_square_free(7u64));
        assert!(!is_square_free(441u64));
        assert!(is_square_free(15u64));
        assert!(is_square_free(1u64));
        assert_eq!(is_prime_power(49u64), Some((7, 2)));
        assert_eq!(is_prime_power(1u64), None);
        assert_eq!(is_prime_power(63u64), None);
        assert_eq!(is_prime_power(2u8), Some((2, 1)));
    }

    #[test]
    fn primality() {
        let primes: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn factorization_reconstructs_up_to_a_million() {
        for n in 1..=1_000_000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.product(), n);
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors().iter().all(|&(p, e)| e >= 1 && is_prime(p)));
        }
    }
}
