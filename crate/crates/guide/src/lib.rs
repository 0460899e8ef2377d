//! The book's chapters, one module each, so that `cargo test` runs every
//! code listing as a doc-test.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}
#[doc = include_str!("../../../book/src/chern-classes.md")]
pub mod chern_classes {}
#[doc = include_str!("../../../book/src/curves.md")]
pub mod curves {}
#[doc = include_str!("../../../book/src/reflexive-families.md")]
pub mod reflexive_families {}
#[doc = include_str!("../../../book/src/elementary-transformations.md")]
pub mod elementary_transformations {}
#[doc = include_str!("../../../book/src/atlas.md")]
pub mod atlas {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
