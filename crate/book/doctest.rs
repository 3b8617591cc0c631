//! Compiles the guide's code blocks as doc-tests.

#[doc = include_str!("src/braids.md")]
pub mod braids {}

#[doc = include_str!("src/word-problem.md")]
pub mod word_problem {}

#[doc = include_str!("src/pure-braids.md")]
pub mod pure_braids {}

#[doc = include_str!("src/maps.md")]
pub mod maps {}

#[doc = include_str!("src/brunnian.md")]
pub mod brunnian {}

#[doc = include_str!("src/verification.md")]
pub mod verification {}

#[doc = include_str!("src/cli.md")]
pub mod cli {}
