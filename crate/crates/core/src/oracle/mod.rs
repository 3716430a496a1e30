//! Exhaustive ground truth: canonical forms under the dihedral group,
//! symmetry and axis classification, and filtered enumeration.
//!
//! Nothing here uses a closed formula. The word-level functions in this file
//! work on plain symbol vectors and are the reference semantics; the engines
//! in [`enumerate`] use a packed representation for speed and are tested
//! against them.

mod enumerate;
mod fixtures;
mod packed;
mod query;
mod symmetry;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use enumerate::{
    axis_breakdown, census, count_classes, count_with, enumerate_classes, enumerate_with,
    AxisBreakdown, Census, CensusKey, Engine,
};
pub use fixtures::{parse_fixture, table_fixture, Fixture, TABLE1, TABLE2};
pub use packed::MAX_PACKED_LEN;
pub use query::{AxisFilter, Query, QueryBuilder};
pub use symmetry::{
    axis_class, symmetry_profile, AxisClass, AxisInfo, AxisKind, Endpoint, EndpointValues,
    SymmetryProfile,
};

/// A configuration: symbol `symbols[i]` sits on point `i` of the circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    alphabet: u8,
    symbols: Vec<u8>,
}

impl CyclicWord {
    pub fn new(alphabet: u8, symbols: Vec<u8>) -> Result<Self> {
        if !(2..=3).contains(&alphabet) {
            return Err(Error::InvalidWord(format!("alphabet must be 2 or 3, got {alphabet}")));
        }
        if symbols.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s >= alphabet) {
            return Err(Error::InvalidWord(format!("symbol {s} outside alphabet {alphabet}")));
        }
        Ok(Self { alphabet, symbols })
    }

    /// Parses either space-separated symbols (`"1 0 2 0"`) or a run of digits
    /// (`"1020"`).
    pub fn parse(alphabet: u8, text: &str) -> Result<Self> {
        let text = text.trim();
        let symbols: Option<Vec<u8>> = if text.contains(char::is_whitespace) {
            text.split_whitespace().map(|t| t.parse().ok()).collect()
        } else {
            text.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
        };
        let symbols = symbols.ok_or_else(|| Error::InvalidWord(format!("cannot parse `{text}`")))?;
        Self::new(alphabet, symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet(&self) -> u8 {
        self.alphabet
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Number of nonzero symbols.
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    /// The word read from position `t`: `result[i] = self[(i + t) mod n]`.
    pub fn rotated(&self, t: usize) -> Self {
        let n = self.len();
        let symbols = (0..n).map(|i| self.symbols[(i + t) % n]).collect();
        Self { alphabet: self.alphabet, symbols }
    }

    /// Image under the reflection `i -> (j - i) mod n`.
    pub fn reflected(&self, j: usize) -> Self {
        let n = self.len();
        let symbols = (0..n).map(|i| self.symbols[(j % n + n - i) % n]).collect();
        Self { alphabet: self.alphabet, symbols }
    }

    /// All `2n` dihedral images, rotations first.
    pub fn images(&self) -> impl Iterator<Item = CyclicWord> + '_ {
        let n = self.len();
        (0..n).map(|t| self.rotated(t)).chain((0..n).map(|j| self.reflected(j)))
    }

    /// Symbols separated by single spaces, as in the fixture files.
    pub fn spaced(&self) -> String {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        parts.join(" ")
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for CyclicWord {
    type Err = Error;

    /// Digits only; the alphabet is 3 if any symbol is 2, else 2.
    fn from_str(s: &str) -> Result<Self> {
        let alphabet = if s.contains('2') { 3 } else { 2 };
        Self::parse(alphabet, s)
    }
}

/// A congruence class, represented by its lexicographically least image.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DihedralClass {
    canonical: CyclicWord,
}

impl DihedralClass {
    /// Wraps a word that is already canonical. Not checked.
    pub(crate) fn from_canonical(canonical: CyclicWord) -> Self {
        Self { canonical }
    }

    pub fn canonical(&self) -> &CyclicWord {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    pub fn alphabet(&self) -> u8 {
        self.canonical.alphabet
    }

    pub fn weight(&self) -> usize {
        self.canonical.weight()
    }

    pub fn contains(&self, word: &CyclicWord) -> bool {
        canonical_form(word) == *self
    }
}

impl Ord for DihedralClass {
    /// By number of nonzero symbols, then by canonical word.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weight(), &self.canonical).cmp(&(other.weight(), &other.canonical))
    }
}

impl PartialOrd for DihedralClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DihedralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// The class of `w`: the minimum of its `2n` images.
pub fn canonical_form(w: &CyclicWord) -> DihedralClass {
    let least = w.images().min().expect("a word has at least one image");
    DihedralClass { canonical: least }
}

/// Whether every circular run of zeros between cyclically consecutive nonzero
/// symbols has length at least `m`. A single nonzero symbol is followed by
/// `n - 1` zeros; the all-zero word satisfies every gap.
pub fn satisfies_gap(w: &CyclicWord, m: usize) -> bool {
    match min_circular_gap(w) {
        Some(g) => g >= m,
        None => true,
    }
}

/// Shortest run of zeros between cyclically consecutive nonzero symbols, or
/// `None` for the all-zero word.
pub fn min_circular_gap(w: &CyclicWord) -> Option<usize> {
    let n = w.len();
    let ones: Vec<usize> = (0..n).filter(|&i| w.symbols[i] != 0).collect();
    let first = *ones.first()?;
    let mut least = usize::MAX;
    for (idx, &i) in ones.iter().enumerate() {
        let next = ones.get(idx + 1).copied().unwrap_or(first + n);
        least = least.min(next - i - 1);
    }
    Some(least)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_form(&w("110000")).to_string(), "000011");
        assert_eq!(canonical_form(&w("000000")).to_string(), "000000");
        assert_eq!(canonical_form(&w("102000102000")).to_string(), "000102000102");
        let c = canonical_form(&w("102000102000"));
        assert!(c.contains(&w("201000201000")));
    }

    #[test]
    fn gap_examples() {
        assert!(satisfies_gap(&w("100100100100"), 2));
        assert!(!satisfies_gap(&w("110000"), 1));
        assert!(satisfies_gap(&w("102000102000"), 1));
        assert!(satisfies_gap(&w("1000"), 3));
        assert!(!satisfies_gap(&w("1000"), 4));
        assert!(satisfies_gap(&w("0000"), 9));
        assert_eq!(min_circular_gap(&w("0101")), Some(1));
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(CyclicWord::parse(3, "1 0 2 0").unwrap().to_string(), "1020");
        assert_eq!(CyclicWord::parse(2, "1 0 1 0").unwrap().spaced(), "1 0 1 0");
        assert!(CyclicWord::parse(2, "1020").is_err());
        assert!(CyclicWord::parse(2, "").is_err());
        assert!(CyclicWord::parse(2, "1x0").is_err());
        assert!(CyclicWord::new(4, vec![0]).is_err());
    }

    #[test]
    fn reflections_are_involutions() {
        let x = w("0010110");
        for j in 0..x.len() {
            assert_eq!(x.reflected(j).reflected(j), x);
        }
        assert_eq!(x.images().count(), 14);
    }
}
