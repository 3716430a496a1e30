use std::fmt;
use std::str::FromStr;

use super::symmetry::{axis_class, symmetry_profile, AxisClass, EndpointValues};
use super::{satisfies_gap, CyclicWord};
use crate::error::{Error, Result};

/// Restriction on how a class's reflection axes meet the points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxisFilter {
    /// Not reflective at all.
    NoAxis,
    /// Reflective, and no axis passes through a point.
    GapGapOnly,
    /// Some axis passes through two points carrying these values (order
    /// ignored). Only even lengths have such axes.
    Connecting(u8, u8),
}

impl AxisFilter {
    pub fn connecting(a: u8, b: u8) -> Self {
        AxisFilter::Connecting(a.min(b), a.max(b))
    }

    pub fn accepts(self, class: &AxisClass) -> bool {
        match (self, class) {
            (AxisFilter::NoAxis, AxisClass::NoAxis) => true,
            (AxisFilter::GapGapOnly, AxisClass::GapGapOnly) => true,
            (AxisFilter::Connecting(a, b), AxisClass::PointAxes(values)) => {
                values.contains(&EndpointValues::Points(a.min(b), a.max(b)))
            }
            _ => false,
        }
    }
}

impl fmt::Display for AxisFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxisFilter::NoAxis => f.write_str("no-axis"),
            AxisFilter::GapGapOnly => f.write_str("gap-gap-only"),
            AxisFilter::Connecting(a, b) => write!(f, "connecting-{a}-{b}"),
        }
    }
}

impl FromStr for AxisFilter {
    type Err = Error;

    /// `no-axis`, `gap-gap-only` or `connecting-A-B`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "no-axis" => return Ok(AxisFilter::NoAxis),
            "gap-gap-only" => return Ok(AxisFilter::GapGapOnly),
            _ => {}
        }
        let values = s
            .strip_prefix("connecting-")
            .and_then(|rest| rest.split_once('-'))
            .and_then(|(a, b)| Some((a.parse::<u8>().ok()?, b.parse::<u8>().ok()?)));
        match values {
            Some((a, b)) => Ok(AxisFilter::connecting(a, b)),
            None => Err(Error::domain(
                "axis filter",
                format!("expected no-axis, gap-gap-only or connecting-A-B, got `{s}`"),
            )),
        }
    }
}

/// A counting or enumeration request. The all-zero word never matches.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Query {
    pub n: usize,
    pub alphabet: u8,
    /// Minimum circular run of zeros between consecutive nonzero symbols.
    pub min_gap: usize,
    /// Exact number of nonzero symbols.
    pub k: Option<usize>,
    pub require_rotsym: bool,
    pub require_reflective: bool,
    pub axis_filter: Option<AxisFilter>,
}

impl Query {
    /// Binary words of length `n`, no constraints.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            alphabet: 2,
            min_gap: 0,
            k: None,
            require_rotsym: false,
            require_reflective: false,
            axis_filter: None,
        }
    }

    pub fn builder(n: usize) -> QueryBuilder {
        QueryBuilder(Self::new(n))
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::ZeroArgument);
        }
        if !(2..=3).contains(&self.alphabet) {
            return Err(Error::domain("alphabet", format!("must be 2 or 3, got {}", self.alphabet)));
        }
        if self.k == Some(0) {
            return Err(Error::domain("k", "the all-zero word is never counted; need k >= 1"));
        }
        if let Some(AxisFilter::Connecting(a, b)) = self.axis_filter {
            if a.max(b) >= self.alphabet {
                return Err(Error::domain(
                    "axis filter",
                    format!("values {a}, {b} outside alphabet {}", self.alphabet),
                ));
            }
        }
        Ok(())
    }

    /// Reference predicate on a single word, built from the plain-vector
    /// functions. Every property tested is invariant on classes.
    pub fn matches(&self, w: &CyclicWord) -> bool {
        let weight = w.weight();
        if weight == 0 || self.k.is_some_and(|k| k != weight) || !satisfies_gap(w, self.min_gap) {
            return false;
        }
        if !(self.require_rotsym || self.require_reflective || self.axis_filter.is_some()) {
            return true;
        }
        let profile = symmetry_profile(w);
        if self.require_rotsym && !profile.is_rotsym() {
            return false;
        }
        if self.require_reflective && !profile.is_reflective() {
            return false;
        }
        match self.axis_filter {
            Some(filter) => filter.accepts(&axis_class(&profile)),
            None => true,
        }
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} alphabet={} gap={}", self.n, self.alphabet, self.min_gap)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if self.require_rotsym {
            f.write_str(" rotsym")?;
        }
        if self.require_reflective {
            f.write_str(" diameter")?;
        }
        if let Some(axis) = self.axis_filter {
            write!(f, " axis={axis}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct QueryBuilder(Query);

impl QueryBuilder {
    pub fn alphabet(mut self, alphabet: u8) -> Self {
        self.0.alphabet = alphabet;
        self
    }

    pub fn min_gap(mut self, m: usize) -> Self {
        self.0.min_gap = m;
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.0.k = Some(k);
        self
    }

    pub fn rotsym(mut self) -> Self {
        self.0.require_rotsym = true;
        self
    }

    pub fn reflective(mut self) -> Self {
        self.0.require_reflective = true;
        self
    }

    pub fn axis(mut self, filter: AxisFilter) -> Self {
        self.0.axis_filter = Some(filter);
        self
    }

    pub fn build(self) -> Result<Query> {
        self.0.validate()?;
        Ok(self.0)
    }
}
