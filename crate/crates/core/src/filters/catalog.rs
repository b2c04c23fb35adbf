//! The citation table shipped in `data/citations.tsv`.

use std::sync::OnceLock;

use serde::Serialize;

use super::FilterId;

const TABLE: &str = include_str!("../../data/citations.tsv");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub key: &'static str,
    pub filter: FilterId,
    pub statement: &'static str,
}

pub fn citations() -> &'static [Citation] {
    static PARSED: OnceLock<Vec<Citation>> = OnceLock::new();
    PARSED.get_or_init(|| {
        TABLE
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
            .map(|line| {
                let mut cols = line.splitn(3, '\t');
                let (Some(key), Some(filter), Some(statement)) =
                    (cols.next(), cols.next(), cols.next())
                else {
                    panic!("malformed citation row: {line}");
                };
                let filter = filter
                    .parse()
                    .unwrap_or_else(|_| panic!("citation row names unknown filter: {line}"));
                Citation {
                    key,
                    filter,
                    statement,
                }
            })
            .collect()
    })
}

pub fn citation(key: &str) -> Option<&'static Citation> {
    citations().iter().find(|c| c.key == key)
}
