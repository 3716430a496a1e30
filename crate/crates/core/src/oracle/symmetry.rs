//! Rotational stabilizers and reflection axes.
//!
//! Reflection `j` maps point `i` to `(j - i) mod n`. Its axis passes through
//! the points `i` with `2i = j (mod n)` and otherwise through midpoints of
//! arcs. For even `n`, even `j` gives an axis through two points and odd `j`
//! one through two arc midpoints; for odd `n` every axis joins a point to the
//! midpoint of the opposite arc.

use std::collections::BTreeSet;
use std::fmt;

use super::CyclicWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxisKind {
    PointPoint,
    PointGap,
    GapGap,
}

/// One end of an axis. Positions are 0-based; `Display` prints them 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Point { pos: usize, value: u8 },
    /// Midpoint of the arc from `after` to `after + 1`.
    Arc { after: usize, n: usize },
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Endpoint::Point { pos, value } => write!(f, "point {} (value {value})", pos + 1),
            Endpoint::Arc { after, n } => {
                write!(f, "midpoint of {},{}", after + 1, (after + 1) % n + 1)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxisInfo {
    /// The reflection `i -> (j - i) mod n` fixing the word.
    pub reflection: usize,
    pub kind: AxisKind,
    pub ends: [Endpoint; 2],
}

impl AxisInfo {
    fn of_reflection(w: &CyclicWord, j: usize) -> Self {
        let n = w.len();
        let point = |pos: usize| Endpoint::Point { pos, value: w.symbols()[pos] };
        let arc = |after: usize| Endpoint::Arc { after: after % n, n };
        if n.is_multiple_of(2) {
            let half = n / 2;
            if j.is_multiple_of(2) {
                let a = j / 2;
                Self { reflection: j, kind: AxisKind::PointPoint, ends: [point(a), point(a + half)] }
            } else {
                let a = (j - 1) / 2;
                Self { reflection: j, kind: AxisKind::GapGap, ends: [arc(a), arc(a + half)] }
            }
        } else {
            let a = j * (n + 1) / 2 % n;
            Self { reflection: j, kind: AxisKind::PointGap, ends: [point(a), arc(a + (n - 1) / 2)] }
        }
    }

    /// Values at the point endpoints.
    pub fn values(&self) -> Option<EndpointValues> {
        match self.ends {
            [Endpoint::Point { value: a, .. }, Endpoint::Point { value: b, .. }] => {
                Some(EndpointValues::Points(a.min(b), a.max(b)))
            }
            [Endpoint::Point { value, .. }, Endpoint::Arc { .. }] => {
                Some(EndpointValues::PointAndArc(value))
            }
            _ => None,
        }
    }
}

impl fmt::Display for AxisInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -- {}", self.ends[0], self.ends[1])
    }
}

/// Symbols sitting at the ends of an axis that passes through at least one
/// point. Pairs are stored with the smaller value first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EndpointValues {
    Points(u8, u8),
    PointAndArc(u8),
}

impl fmt::Display for EndpointValues {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndpointValues::Points(a, b) => write!(f, "{a}-{b}"),
            EndpointValues::PointAndArc(v) => write!(f, "{v}-arc"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryProfile {
    /// Rotations fixing the word, identity included.
    pub stabilizer_order: usize,
    pub minimal_period: usize,
    pub axes: Vec<AxisInfo>,
}

impl SymmetryProfile {
    pub fn is_rotsym(&self) -> bool {
        self.stabilizer_order >= 2
    }

    pub fn is_reflective(&self) -> bool {
        !self.axes.is_empty()
    }
}

pub fn symmetry_profile(w: &CyclicWord) -> SymmetryProfile {
    let n = w.len();
    let minimal_period = (1..=n).find(|&t| w.rotated(t % n) == *w).unwrap_or(n);
    let axes = (0..n)
        .filter(|&j| w.reflected(j) == *w)
        .map(|j| AxisInfo::of_reflection(w, j))
        .collect();
    SymmetryProfile { stabilizer_order: n / minimal_period, minimal_period, axes }
}

/// How a word's axes meet the points of the circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxisClass {
    NoAxis,
    /// Reflective, but no axis passes through a point.
    GapGapOnly,
    /// The distinct endpoint-value combinations over all axes through a point.
    PointAxes(BTreeSet<EndpointValues>),
}

pub fn axis_class(profile: &SymmetryProfile) -> AxisClass {
    if profile.axes.is_empty() {
        return AxisClass::NoAxis;
    }
    let values: BTreeSet<EndpointValues> = profile.axes.iter().filter_map(AxisInfo::values).collect();
    if values.is_empty() {
        AxisClass::GapGapOnly
    } else {
        AxisClass::PointAxes(values)
    }
}
