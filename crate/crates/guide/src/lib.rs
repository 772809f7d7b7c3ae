//! The chapters of `book/` compiled as doc-tests, one module per chapter.

#[doc = include_str!("../../../book/src/overview.md")]
pub mod overview {}
#[doc = include_str!("../../../book/src/fields.md")]
pub mod fields {}
#[doc = include_str!("../../../book/src/representations.md")]
pub mod representations {}
#[doc = include_str!("../../../book/src/extensions.md")]
pub mod extensions {}
#[doc = include_str!("../../../book/src/bimodule.md")]
pub mod bimodule {}
#[doc = include_str!("../../../book/src/lattice.md")]
pub mod lattice {}
#[doc = include_str!("../../../book/src/closed.md")]
pub mod closed {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
