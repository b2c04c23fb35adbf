//! Fusion-category types: the `(d_1,n_1;d_2,n_2;...)` statistics of how many
//! simple objects a category has in each FP dimension.
//!
//! A [`TypeVector`] only guarantees the structural invariants (dimensions
//! strictly ascending starting at 1, counts positive). Parity and the other
//! MNSD constraints are left to the filters so that a bad type can be
//! explained rather than refused outright.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `count` simple classes of FP dimension `dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub dim: u64,
    pub count: u64,
}

impl Entry {
    pub const fn new(dim: u64, count: u64) -> Self {
        Self { dim, count }
    }

    /// `count * dim^2`, the entry's share of the total dimension.
    pub fn weight(&self) -> Option<u64> {
        self.dim
            .checked_mul(self.dim)
            .and_then(|sq| sq.checked_mul(self.count))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeVector {
    entries: Vec<Entry>,
    fpdim: u64,
    rank: u64,
}

impl TypeVector {
    pub fn new(entries: Vec<Entry>) -> Result<Self> {
        let first = entries.first().ok_or_else(|| parse_err("", "empty type"))?;
        if first.dim != 1 {
            return Err(parse_err(
                &pair_text(first),
                "the first entry must have dimension 1",
            ));
        }
        for w in entries.windows(2) {
            if w[1].dim == w[0].dim {
                return Err(parse_err(&pair_text(&w[1]), "repeated dimension"));
            }
            if w[1].dim < w[0].dim {
                return Err(parse_err(&pair_text(&w[1]), "dimensions must ascend"));
            }
        }
        if let Some(e) = entries.iter().find(|e| e.count == 0) {
            return Err(parse_err(&pair_text(e), "counts must be positive"));
        }
        let mut fpdim = 0u64;
        let mut rank = 0u64;
        for e in &entries {
            fpdim = e
                .weight()
                .and_then(|w| fpdim.checked_add(w))
                .ok_or_else(|| parse_err(&pair_text(e), "dimension overflows u64"))?;
            rank = rank
                .checked_add(e.count)
                .ok_or_else(|| parse_err(&pair_text(e), "rank overflows u64"))?;
        }
        Ok(Self {
            entries,
            fpdim,
            rank,
        })
    }

    /// Builds from `(dim, count)` pairs.
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(d, n)| Entry::new(d, n)).collect())
    }

    /// The pointed type `(1,n)`.
    pub fn pointed(n: u64) -> Result<Self> {
        Self::new(vec![Entry::new(1, n)])
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Entries of dimension greater than one.
    pub fn non_invertible(&self) -> &[Entry] {
        &self.entries[1..]
    }

    /// `n_1`, the number of invertible simple objects.
    pub fn invertibles(&self) -> u64 {
        self.entries[0].count
    }

    /// `sum n_i d_i^2`.
    pub fn fpdim(&self) -> u64 {
        self.fpdim
    }

    /// `sum n_i`.
    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn is_pointed(&self) -> bool {
        self.entries.len() == 1
    }

    pub fn max_dim(&self) -> u64 {
        self.entries[self.entries.len() - 1].dim
    }

    pub fn count_of(&self, dim: u64) -> Option<u64> {
        self.entries.iter().find(|e| e.dim == dim).map(|e| e.count)
    }

    pub fn dims(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().map(|e| e.dim)
    }

    /// Divides every count by `r`, if all of them are divisible.
    pub fn divide_pointwise(&self, r: u64) -> Option<Self> {
        if r == 0 || self.entries.iter().any(|e| e.count % r != 0) {
            return None;
        }
        let entries = self
            .entries
            .iter()
            .map(|e| Entry::new(e.dim, e.count / r))
            .collect();
        Self::new(entries).ok()
    }

    /// Canonical text form, e.g. `(1,3;3,16;7,6)`.
    pub fn format(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
}

/// Canonical order: ascending rank, then lexicographic on the entries.
impl Ord for TypeVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for TypeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{}", e.dim, e.count)?;
        }
        f.write_str(")")
    }
}

impl Serialize for TypeVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for TypeVector {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let body = match (compact.strip_prefix('('), compact.ends_with(')')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => compact.as_str(),
            _ => return Err(parse_err(&compact, "unbalanced parentheses")),
        };
        if body.is_empty() {
            return Err(parse_err(text.trim(), "empty type"));
        }
        let mut entries = Vec::new();
        for pair in body.split(';') {
            let (d, n) = pair
                .split_once(',')
                .ok_or_else(|| parse_err(pair, "expected `dimension,count`"))?;
            let dim = parse_int(d, pair)?;
            let count = parse_int(n, pair)?;
            if dim == 0 {
                return Err(parse_err(pair, "dimensions must be positive"));
            }
            entries.push(Entry::new(dim, count));
        }
        Self::new(entries)
    }
}

fn parse_int(digits: &str, pair: &str) -> Result<u64> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(pair, "expected a non-negative integer"));
    }
    digits
        .parse()
        .map_err(|_| parse_err(pair, "integer out of range"))
}

fn pair_text(e: &Entry) -> String {
    format!("{},{}", e.dim, e.count)
}

fn parse_err(token: &str, message: &str) -> Error {
    Error::Parse {
        token: token.to_string(),
        message: message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(s: &str) -> TypeVector {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            tv("(1,3;3,16;7,6)").entries(),
            &[Entry::new(1, 3), Entry::new(3, 16), Entry::new(7, 6)]
        );
        assert_eq!(tv("1,1").entries(), &[Entry::new(1, 1)]);
        assert_eq!(tv(" ( 1, 9 ; 3 ,80 ) "), tv("(1,9;3,80)"));
    }

    #[test]
    fn parse_rejections_name_the_token() {
        let err = "(3,16;1,3)".parse::<TypeVector>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "3,16"));
        let err = "(1,3;3,0)".parse::<TypeVector>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "3,0"));
        let err = "(1,3;3,4;3,2)".parse::<TypeVector>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref message, .. } if message.contains("repeated")));
        let err = "(1,3;5,4;3,2)".parse::<TypeVector>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref message, .. } if message.contains("ascend")));
        for bad in [
            "", "()", "(1,3", "1,3)", "(1;3)", "(1,a)", "(1,-3)", "(0,1)", "(1,3;)",
        ] {
            assert!(
                bad.parse::<TypeVector>().is_err(),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn format_examples() {
        let t = TypeVector::from_pairs(&[(1, 9), (3, 80)]).unwrap();
        assert_eq!(t.format(), "(1,9;3,80)");
        assert_eq!(TypeVector::pointed(1).unwrap().format(), "(1,1)");
        let t = TypeVector::from_pairs(&[(1, 15), (3, 40), (5, 30)]).unwrap();
        assert_eq!(t.format(), "(1,15;3,40;5,30)");
    }

    #[test]
    fn derived_quantities() {
        let t = tv("(1,3;3,16;7,6)");
        assert_eq!((t.fpdim(), t.rank(), t.is_pointed()), (441, 25, false));
        assert_eq!(tv("(1,1)").fpdim(), 1);
        assert_eq!(tv("(1,15;3,40;5,30)").fpdim(), 1125);
        assert_eq!(tv("(1,441)").rank(), 441);
        assert_eq!(tv("(1,9;3,26)").rank(), 35);
        assert!(tv("(1,225)").is_pointed());
        assert!(tv("(1,1)").is_pointed());
    }

    #[test]
    fn divide_pointwise_examples() {
        assert_eq!(
            tv("(1,21;3,56;5,42)").divide_pointwise(7),
            Some(tv("(1,3;3,8;5,6)"))
        );
        assert_eq!(tv("(1,3)").divide_pointwise(3), Some(tv("(1,1)")));
        assert_eq!(tv("(1,9;3,80)").divide_pointwise(7), None);
        assert_eq!(tv("(1,9;3,80)").divide_pointwise(0), None);
    }

    #[test]
    fn overflow_is_rejected() {
        assert!("(1,1;4294967297,2)".parse::<TypeVector>().is_err());
    }

    #[test]
    fn canonical_order_is_rank_first() {
        let mut v = vec![tv("(1,27)"), tv("(1,9;3,2)")];
        v.sort();
        assert_eq!(v, vec![tv("(1,9;3,2)"), tv("(1,27)")]);
    }
}
