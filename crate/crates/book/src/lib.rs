//! Compiles every listing of the guide in `book/src` as a doctest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/operads.md")]
pub mod operads {}
#[doc = include_str!("../../../book/src/intervals.md")]
pub mod intervals {}
#[doc = include_str!("../../../book/src/chains.md")]
pub mod chains {}
#[doc = include_str!("../../../book/src/arrangements.md")]
pub mod arrangements {}
#[doc = include_str!("../../../book/src/symmetries.md")]
pub mod symmetries {}
#[doc = include_str!("../../../book/src/combinatorics.md")]
pub mod combinatorics {}
#[doc = include_str!("../../../book/src/scattering.md")]
pub mod scattering {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
