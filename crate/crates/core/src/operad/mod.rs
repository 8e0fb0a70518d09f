//! Generic non-symmetric operad machinery.
//!
//! An operad element has an arity `n ≥ 1` and can be substituted into slot
//! `i` of another element. Slots are numbered from 1. The laws every
//! implementation must satisfy are checked by the functions in [`laws`].

use std::fmt::Debug;

use thiserror::Error;

pub mod frame;
pub mod laws;
pub mod tree;
pub mod word;

pub use frame::{moving_frame_compose, GroupElement};
pub use laws::{
    check_morphism, check_parallel, check_sequential, run_law_suite, run_morphism_suite, Law, LawCheck, LawError,
    LawFailure, LawReport, LawSuiteReport, Sampler,
};
pub use tree::{graft, PlanarTree, TreeParseError};
pub use word::{word_compose, Monoid, PositiveRational, Word, WordError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("composition slot {index} is out of range for arity {arity}")]
pub struct IndexOutOfRange {
    pub index: usize,
    pub arity: usize,
}

/// Fails unless `1 ≤ index ≤ arity`.
pub fn check_slot(index: usize, arity: usize) -> Result<(), IndexOutOfRange> {
    if index == 0 || index > arity {
        Err(IndexOutOfRange { index, arity })
    } else {
        Ok(())
    }
}

/// A graded collection with partial compositions `a ∘ᵢ b`.
///
/// Implementations guarantee `arity(a ∘ᵢ b) = arity(a) + arity(b) − 1` and
/// use exact structural equality.
pub trait Operad: Clone + PartialEq + Debug {
    fn arity(&self) -> usize;

    /// `self ∘ᵢ other` for `1 ≤ i ≤ self.arity()`.
    fn compose(&self, i: usize, other: &Self) -> Result<Self, IndexOutOfRange>;
}

/// The associative operad, represented by bare arities: `m ∘ᵢ n = m + n − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arity(pub usize);

impl Operad for Arity {
    fn arity(&self) -> usize {
        self.0
    }

    fn compose(&self, i: usize, other: &Self) -> Result<Self, IndexOutOfRange> {
        check_slot(i, self.0)?;
        Ok(Arity(self.0 + other.0 - 1))
    }
}

/// The arity map into the associative operad; a morphism from any operad.
pub fn arity_of<O: Operad>(element: &O) -> Arity {
    Arity(element.arity())
}
