//! The word operad over a monoid.
//!
//! Elements of arity `m` are words `(a₁, …, a_m)` of monoid elements and
//!
//! ```text
//! (a₁,…,a_m) ∘ᵢ (b₁,…,b_n) = (a₁,…,a_{i−1}, aᵢb₁,…,aᵢb_n, a_{i+1},…,a_m)
//! ```

use std::fmt::Debug;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{check_slot, IndexOutOfRange, Operad};
use crate::rational::Rational;

pub trait Monoid: Clone + PartialEq + Debug {
    fn identity() -> Self;
    /// The monoid product `self · other`.
    fn mul(&self, other: &Self) -> Self;
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("a word needs at least one letter")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word<G> {
    letters: Vec<G>,
}

impl<G: Monoid> Word<G> {
    pub fn new(letters: Vec<G>) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::Empty);
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[G] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<G> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

pub fn word_compose<G: Monoid>(a: &Word<G>, i: usize, b: &Word<G>) -> Result<Word<G>, IndexOutOfRange> {
    check_slot(i, a.len())?;
    let slot = &a.letters[i - 1];
    let mut letters = Vec::with_capacity(a.len() + b.len() - 1);
    letters.extend_from_slice(&a.letters[..i - 1]);
    letters.extend(b.letters.iter().map(|x| slot.mul(x)));
    letters.extend_from_slice(&a.letters[i..]);
    Ok(Word { letters })
}

impl<G: Monoid> Operad for Word<G> {
    fn arity(&self) -> usize {
        self.len()
    }

    fn compose(&self, i: usize, other: &Self) -> Result<Self, IndexOutOfRange> {
        word_compose(self, i, other)
    }
}

/// Positive rationals under multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PositiveRational(Rational);

impl PositiveRational {
    pub fn new(value: Rational) -> Option<Self> {
        value.is_positive().then_some(PositiveRational(value))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl Monoid for PositiveRational {
    fn identity() -> Self {
        PositiveRational(Rational::one())
    }

    fn mul(&self, other: &Self) -> Self {
        PositiveRational(&self.0 * &other.0)
    }
}

impl TryFrom<String> for PositiveRational {
    type Error = String;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        let r = crate::rational::parse_rational(&value).map_err(|e| e.to_string())?;
        PositiveRational::new(r).ok_or_else(|| format!("{value} is not positive"))
    }
}

impl From<PositiveRational> for String {
    fn from(value: PositiveRational) -> Self {
        crate::rational::format_rational(&value.0)
    }
}

impl Serialize for Word<PositiveRational> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.letters.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Word<PositiveRational> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let letters = Vec::<PositiveRational>::deserialize(deserializer)?;
        Word::new(letters).map_err(serde::de::Error::custom)
    }
}
