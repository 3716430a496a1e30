//! Enumeration engines.
//!
//! * [`Engine::Naive`] canonicalizes every word with the plain-vector
//!   functions and deduplicates. Slow; used as a check.
//! * [`Engine::PeriodicSeed`] builds every word fixed by a rotation of prime
//!   order `p` from its period-`n/p` seed. Only answers rotation-symmetric
//!   queries.
//! * [`Engine::Scan`] visits every packed word and keeps those that are their
//!   own canonical form, so each class is met exactly once.
//!
//! Filters are class invariants, so they are applied to representatives.
//! Results are sorted, which makes them independent of the worker count.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use super::packed::{from_index, Packed, MAX_PACKED_LEN};
use super::query::Query;
use super::symmetry::{axis_class, symmetry_profile, AxisClass, EndpointValues};
use super::{canonical_form, CyclicWord, DihedralClass};
use crate::error::{Error, Result};
use crate::numtheory::{prime_divisors, BigCount};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Naive,
    PeriodicSeed,
    Scan,
}

impl Engine {
    /// Largest number of words an engine will visit.
    pub fn cap(self) -> u64 {
        match self {
            Engine::Naive => 3u64.pow(14),
            Engine::PeriodicSeed | Engine::Scan => 1 << 30,
        }
    }

    /// The engine used when none is named: seeds for rotation-symmetric
    /// queries, the full scan otherwise.
    pub fn default_for(q: &Query) -> Engine {
        if q.require_rotsym {
            Engine::PeriodicSeed
        } else {
            Engine::Scan
        }
    }
}

fn space(alphabet: u8, len: usize) -> Option<u64> {
    (alphabet as u64).checked_pow(len as u32)
}

fn primes_of(n: usize) -> Vec<u32> {
    prime_divisors(n as u64)
        .expect("n >= 1")
        .into_iter()
        .map(|p| p as u32)
        .collect()
}

fn check_cap(q: &Query, engine: Engine) -> Result<()> {
    let exceeded = Error::CapExceeded {
        what: match engine {
            Engine::Naive => "naive enumeration",
            Engine::PeriodicSeed => "periodic-seed enumeration",
            Engine::Scan => "full scan",
        },
        n: q.n,
        alphabet: q.alphabet,
    };
    if q.n > MAX_PACKED_LEN {
        return Err(exceeded);
    }
    let visited = match engine {
        Engine::Naive | Engine::Scan => space(q.alphabet, q.n),
        Engine::PeriodicSeed => primes_of(q.n)
            .iter()
            .map(|&p| space(q.alphabet, q.n / p as usize))
            .try_fold(0u64, |acc, s| s.and_then(|s| acc.checked_add(s))),
    };
    match visited {
        Some(v) if v <= engine.cap() => Ok(()),
        _ => Err(exceeded),
    }
}

/// Query filters on packed canonical words.
struct PackedFilter<'a> {
    q: &'a Query,
    packed: Packed,
    primes: Vec<u32>,
}

impl<'a> PackedFilter<'a> {
    fn new(q: &'a Query) -> Self {
        Self { q, packed: Packed::new(q.n), primes: primes_of(q.n) }
    }

    /// Everything except symmetry: weight and gap.
    #[inline]
    fn cheap(&self, w: u64) -> bool {
        let weight = self.packed.weight(w);
        if weight == 0 || self.q.k.is_some_and(|k| k != weight as usize) {
            return false;
        }
        self.q.min_gap == 0 || self.packed.min_gap(w).is_some_and(|g| g as usize >= self.q.min_gap)
    }

    #[inline]
    fn symmetric(&self, w: u64) -> bool {
        if self.q.require_rotsym && !self.packed.is_rotsym(w, &self.primes) {
            return false;
        }
        if self.q.require_reflective && !self.packed.is_reflective(w) {
            return false;
        }
        match self.q.axis_filter {
            Some(filter) => {
                let word = self.packed.unpack(w, self.q.alphabet);
                filter.accepts(&axis_class(&symmetry_profile(&word)))
            }
            None => true,
        }
    }
}

fn to_classes(q: &Query, mut words: Vec<u64>) -> Vec<DihedralClass> {
    let packed = Packed::new(q.n);
    words.sort_unstable();
    words.dedup();
    let mut classes: Vec<DihedralClass> = words
        .into_iter()
        .map(|w| DihedralClass::from_canonical(packed.unpack(w, q.alphabet)))
        .collect();
    classes.sort();
    classes
}

fn naive(q: &Query) -> Vec<DihedralClass> {
    let total = space(q.alphabet, q.n).expect("checked by cap");
    let a = q.alphabet as u64;
    let n = q.n;
    let canonicals: BTreeSet<CyclicWord> = (0..total)
        .into_par_iter()
        .fold(BTreeSet::new, |mut acc, mut index| {
            let mut symbols = vec![0u8; n];
            for slot in symbols.iter_mut().rev() {
                *slot = (index % a) as u8;
                index /= a;
            }
            let word = CyclicWord::new(q.alphabet, symbols).expect("digits below alphabet");
            acc.insert(canonical_form(&word).canonical().clone());
            acc
        })
        .reduce(BTreeSet::new, |mut x, mut y| {
            if x.len() < y.len() {
                std::mem::swap(&mut x, &mut y);
            }
            x.extend(y);
            x
        });
    let mut classes: Vec<DihedralClass> = canonicals
        .into_iter()
        .filter(|c| q.matches(c))
        .map(DihedralClass::from_canonical)
        .collect();
    classes.sort();
    classes
}

fn periodic_seed_words(q: &Query) -> Vec<u64> {
    let filter = PackedFilter::new(q);
    let packed = filter.packed;
    let mut out = Vec::new();
    for &p in &filter.primes {
        let len = q.n / p as usize;
        let seeds = space(q.alphabet, len).expect("checked by cap");
        let found: Vec<u64> = (0..seeds)
            .into_par_iter()
            .filter_map(|seed| {
                let w = packed.repeat(from_index(seed, len, q.alphabet), len as u32);
                if !filter.cheap(w) {
                    return None;
                }
                let c = packed.canonical(w);
                filter.symmetric(c).then_some(c)
            })
            .collect();
        out.extend(found);
    }
    out
}

fn scan_words(q: &Query) -> Vec<u64> {
    let filter = PackedFilter::new(q);
    let total = space(q.alphabet, q.n).expect("checked by cap");
    (0..total)
        .into_par_iter()
        .filter_map(|index| {
            let w = from_index(index, q.n, q.alphabet);
            (filter.cheap(w) && filter.packed.is_canonical(w) && filter.symmetric(w)).then_some(w)
        })
        .collect()
}

/// All classes matching `q`, sorted by number of nonzero symbols and then
/// canonical word.
pub fn enumerate_with(q: &Query, engine: Engine) -> Result<Vec<DihedralClass>> {
    q.validate()?;
    check_cap(q, engine)?;
    match engine {
        Engine::Naive => Ok(naive(q)),
        Engine::PeriodicSeed => {
            if !q.require_rotsym {
                return Err(Error::domain(
                    "engine",
                    "the periodic-seed engine only answers rotation-symmetric queries",
                ));
            }
            Ok(to_classes(q, periodic_seed_words(q)))
        }
        Engine::Scan => Ok(to_classes(q, scan_words(q))),
    }
}

pub fn enumerate_classes(q: &Query) -> Result<Vec<DihedralClass>> {
    enumerate_with(q, Engine::default_for(q))
}

/// Number of matching classes. The full scan counts without collecting.
pub fn count_with(q: &Query, engine: Engine) -> Result<u64> {
    if engine != Engine::Scan {
        return Ok(enumerate_with(q, engine)?.len() as u64);
    }
    q.validate()?;
    check_cap(q, engine)?;
    let filter = PackedFilter::new(q);
    let total = space(q.alphabet, q.n).expect("checked by cap");
    Ok((0..total)
        .into_par_iter()
        .filter(|&index| {
            let w = from_index(index, q.n, q.alphabet);
            filter.cheap(w) && filter.packed.is_canonical(w) && filter.symmetric(w)
        })
        .count() as u64)
}

pub fn count_classes(q: &Query) -> Result<BigCount> {
    count_with(q, Engine::default_for(q)).map(BigCount::from)
}

/// Matching classes split by how their axes meet the points.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxisBreakdown {
    pub total: u64,
    pub no_axis: u64,
    pub gap_gap_only: u64,
    pub with_point_axis: u64,
    /// For each endpoint-value combination, the classes having at least one
    /// axis with it. A class with several combinations is counted under each.
    pub by_endpoint_values: BTreeMap<EndpointValues, u64>,
    /// Classes by their exact set of combinations.
    pub by_signature: BTreeMap<Vec<EndpointValues>, u64>,
}

pub fn axis_breakdown(q: &Query) -> Result<AxisBreakdown> {
    let mut out = AxisBreakdown::default();
    for class in enumerate_classes(q)? {
        out.total += 1;
        match axis_class(&symmetry_profile(class.canonical())) {
            AxisClass::NoAxis => out.no_axis += 1,
            AxisClass::GapGapOnly => out.gap_gap_only += 1,
            AxisClass::PointAxes(values) => {
                out.with_point_axis += 1;
                for &v in &values {
                    *out.by_endpoint_values.entry(v).or_default() += 1;
                }
                *out.by_signature.entry(values.into_iter().collect()).or_default() += 1;
            }
        }
    }
    Ok(out)
}

/// Histogram cell of a [`census`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CensusKey {
    pub k: u32,
    pub rotsym: bool,
    pub reflective: bool,
    /// Shortest circular gap, capped at the census gap cap.
    pub gap: u32,
}

/// Every nonzero class of a given length and alphabet, tallied by weight,
/// symmetry and (capped) shortest gap. One scan answers every query without
/// an axis filter whose gap is at most the cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub alphabet: u8,
    pub gap_cap: u32,
    pub cells: BTreeMap<CensusKey, u64>,
}

impl Census {
    pub fn count(&self, q: &Query) -> Result<u64> {
        if q.n != self.n || q.alphabet != self.alphabet {
            return Err(Error::domain("query", format!("census is for n = {}, alphabet = {}", self.n, self.alphabet)));
        }
        if q.axis_filter.is_some() || q.min_gap > self.gap_cap as usize {
            return Err(Error::domain("query", "outside what the census tallies"));
        }
        Ok(self
            .cells
            .iter()
            .filter(|(key, _)| {
                key.gap as usize >= q.min_gap
                    && q.k.is_none_or(|k| key.k as usize == k)
                    && (!q.require_rotsym || key.rotsym)
                    && (!q.require_reflective || key.reflective)
            })
            .map(|(_, &c)| c)
            .sum())
    }
}

pub fn census(n: usize, alphabet: u8, gap_cap: u32) -> Result<Census> {
    let q = Query { alphabet, ..Query::new(n) };
    q.validate()?;
    check_cap(&q, Engine::Scan)?;
    let packed = Packed::new(n);
    let primes = primes_of(n);
    let total = space(alphabet, n).expect("checked by cap");
    let cells = (0..total)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<CensusKey, u64>, index| {
            let w = from_index(index, n, alphabet);
            if w != 0 && packed.is_canonical(w) {
                let key = CensusKey {
                    k: packed.weight(w),
                    rotsym: packed.is_rotsym(w, &primes),
                    reflective: packed.is_reflective(w),
                    gap: packed.min_gap(w).expect("nonzero word").min(gap_cap),
                };
                *acc.entry(key).or_default() += 1;
            }
            acc
        })
        .reduce(HashMap::new, |mut x, y| {
            for (key, c) in y {
                *x.entry(key).or_default() += c;
            }
            x
        });
    Ok(Census { n, alphabet, gap_cap, cells: cells.into_iter().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::AxisFilter;

    fn words(classes: &[DihedralClass]) -> Vec<String> {
        classes.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn small_examples() {
        let q = Query::builder(6).min_gap(1).rotsym().build().unwrap();
        assert_eq!(words(&enumerate_classes(&q).unwrap()), ["001001", "010101"]);
        let q = Query::builder(4).rotsym().build().unwrap();
        assert_eq!(count_classes(&q).unwrap(), BigCount::from(2u32));
        // including the zero word: 6 and 13
        assert_eq!(count_with(&Query::new(4), Engine::Scan).unwrap() + 1, 6);
        assert_eq!(count_with(&Query::new(6), Engine::Naive).unwrap() + 1, 13);
    }

    #[test]
    fn engines_agree_small() {
        for n in 1..=10 {
            for alphabet in [2u8, 3] {
                for m in 0..=2 {
                    for refl in [false, true] {
                        let mut q = Query::builder(n).alphabet(alphabet).min_gap(m).rotsym();
                        if refl {
                            q = q.reflective();
                        }
                        let q = q.build().unwrap();
                        let a = enumerate_with(&q, Engine::Naive).unwrap();
                        assert_eq!(a, enumerate_with(&q, Engine::PeriodicSeed).unwrap(), "{q}");
                        assert_eq!(a, enumerate_with(&q, Engine::Scan).unwrap(), "{q}");
                        assert_eq!(a.len() as u64, count_with(&q, Engine::Scan).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn census_matches_direct_counts() {
        let c = census(12, 2, 3).unwrap();
        for m in 0..=3 {
            for k in [None, Some(3), Some(4)] {
                for (rot, refl) in [(false, false), (true, false), (false, true), (true, true)] {
                    let q = Query { min_gap: m, k, require_rotsym: rot, require_reflective: refl, ..Query::new(12) };
                    assert_eq!(c.count(&q).unwrap(), count_with(&q, Engine::Scan).unwrap(), "{q}");
                }
            }
        }
        let with_axis = Query::builder(12).axis(AxisFilter::NoAxis).build().unwrap();
        assert!(c.count(&with_axis).is_err());
    }

    #[test]
    fn caps_and_engine_domain() {
        let q = Query::new(40);
        assert!(matches!(count_classes(&q), Err(Error::CapExceeded { .. })));
        let q = Query::new(23);
        assert!(matches!(enumerate_with(&q, Engine::Naive), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate_with(&q, Engine::PeriodicSeed), Err(Error::Domain { .. })));
        let q = Query::builder(1).rotsym().build().unwrap();
        assert!(enumerate_classes(&q).unwrap().is_empty());
    }
}
