//! The guide's chapters, compiled as documentation so that `cargo test --doc`
//! runs every code block in them.

#![doc = include_str!("../../../book/src/introduction.md")]

#[doc = include_str!("../../../book/src/classes.md")]
pub mod classes {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/gaps.md")]
pub mod gaps {}

#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}

#[doc = include_str!("../../../book/src/ternary.md")]
pub mod ternary {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
