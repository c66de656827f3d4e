pub mod cli;
pub mod diagrams;
pub mod error;
pub mod inflation;
pub mod input_algebra;
pub mod kernel;
pub mod scalars;
pub mod specht;
pub mod split_pair;

pub use error::{Error, Result};

/// The book's chapters, compiled so that every snippet runs under `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/inflation.md")]
    mod inflation {}
    #[doc = include_str!("../../../book/src/corners.md")]
    mod corners {}
    #[doc = include_str!("../../../book/src/split_pair.md")]
    mod split_pair {}
    #[doc = include_str!("../../../book/src/specht.md")]
    mod specht {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
