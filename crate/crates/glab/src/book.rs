//! Doctest shims for the book: every fenced Rust block in `book/src/*.md`
//! compiles and runs under `cargo test --doc`, keeping the guide in sync
//! with the crate.

#[doc = include_str!("../../../book/src/introduction.md")]
pub struct Introduction;

#[doc = include_str!("../../../book/src/model.md")]
pub struct Model;

#[doc = include_str!("../../../book/src/shape-functions.md")]
pub struct ShapeFunctions;

#[doc = include_str!("../../../book/src/decompositions.md")]
pub struct Decompositions;

#[doc = include_str!("../../../book/src/fluctuations.md")]
pub struct Fluctuations;

#[doc = include_str!("../../../book/src/lcs.md")]
pub struct Lcs;

#[doc = include_str!("../../../book/src/experiments.md")]
pub struct Experiments;
