//! Exact counting and exhaustive enumeration of cyclic configurations on `n`
//! equally spaced points of a circle, where two configurations are the same
//! when a rotation and/or a reflection in a diameter carries one onto the
//! other.
//!
//! The crate has two independent halves:
//!
//! * [`counting`] evaluates closed forms (Möbius inversion over divisor
//!   lattices, `m`-step Fibonacci recurrences) in exact arithmetic.
//! * [`oracle`] canonicalizes words under the dihedral group and counts by
//!   brute force.
//!
//! [`verify`] ties them together: identity suites, the formula-versus-oracle
//! grid and the ternary discrepancy report.

pub mod counting;
pub mod error;
pub mod fib;
pub mod numtheory;
pub mod oracle;
pub mod verify;

pub use counting::DyadicRational;
pub use error::{Error, Result};
pub use numtheory::BigCount;
pub use oracle::{AxisFilter, CyclicWord, DihedralClass, Query};
