//! Golden class lists.
//!
//! Format: a header line `n=<n> alphabet=<a>`, then one configuration per
//! line with space-separated symbols. Lines starting with `#` are comments; a
//! comment of the form `# as-listed row <i>: <symbols>` records a row whose
//! original form was replaced.

use std::collections::BTreeSet;

use super::{canonical_form, CyclicWord, DihedralClass};
use crate::error::{Error, Result};

pub const TABLE1: &str = include_str!("../../fixtures/table1.txt");
pub const TABLE2: &str = include_str!("../../fixtures/table2.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub n: usize,
    pub alphabet: u8,
    /// Rows in file order.
    pub rows: Vec<CyclicWord>,
    /// `(row number, symbols)` for rows stored in replaced form.
    pub as_listed: Vec<(usize, String)>,
}

impl Fixture {
    /// The canonical classes of the rows.
    pub fn classes(&self) -> BTreeSet<DihedralClass> {
        self.rows.iter().map(canonical_form).collect()
    }
}

fn header_value<'a>(field: &'a str, key: &str) -> Result<&'a str> {
    field
        .strip_prefix(key)
        .and_then(|v| v.strip_prefix('='))
        .ok_or_else(|| Error::Fixture(format!("expected `{key}=...` in header, got `{field}`")))
}

pub fn parse_fixture(text: &str) -> Result<Fixture> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Fixture("empty fixture".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Fixture(format!("bad header `{header}`")));
    }
    let n: usize = header_value(fields[0], "n")?
        .parse()
        .map_err(|_| Error::Fixture(format!("bad length in `{header}`")))?;
    let alphabet: u8 = header_value(fields[1], "alphabet")?
        .parse()
        .map_err(|_| Error::Fixture(format!("bad alphabet in `{header}`")))?;

    let mut rows = Vec::new();
    let mut as_listed = Vec::new();
    for line in lines {
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(rest) = comment.trim().strip_prefix("as-listed row ") {
                let (num, symbols) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::Fixture(format!("bad as-listed note `{line}`")))?;
                let num = num.trim().parse().map_err(|_| Error::Fixture(format!("bad row number in `{line}`")))?;
                as_listed.push((num, symbols.trim().to_string()));
            }
            continue;
        }
        let word = CyclicWord::parse(alphabet, line).map_err(|e| Error::Fixture(e.to_string()))?;
        if word.len() != n {
            return Err(Error::Fixture(format!("row `{line}` has length {}, expected {n}", word.len())));
        }
        rows.push(word);
    }
    Ok(Fixture { n, alphabet, rows, as_listed })
}

/// Table 1 (`which = 1`, binary, `n = 24`) or table 2 (`which = 2`, ternary,
/// `n = 12`).
pub fn table_fixture(which: u8) -> Result<Fixture> {
    match which {
        1 => parse_fixture(TABLE1),
        2 => parse_fixture(TABLE2),
        _ => Err(Error::domain("table", format!("expected 1 or 2, got {which}"))),
    }
}
