//! Planar rooted line arrangements.
//!
//! The root line is the axis `t = 0`, oriented by increasing `q`. A rooted
//! line is stored as `(q, p)`: it crosses the root at `(q, 0)` and has
//! momentum `p = cot θ`, so its points are `(q + p·t, t)`. Lines are listed
//! in root-crossing order. Lines `i < j` meet at time
//! `(qⱼ − qᵢ)/(pᵢ − pⱼ)`, which is positive iff `pᵢ > pⱼ`, so a valid
//! arrangement has `q` strictly increasing and `p` strictly decreasing.
//!
//! Line indices in this module are 1-based, like composition slots.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chain::{self, PolygonalChain};
use crate::geometry::{Line2, Point2};
use crate::rational::{format_rational, Rational};

pub mod compose;
pub mod envelope;
pub mod generators;
pub mod permutahedron;
pub mod regions;
pub mod symmetry;
pub mod tuple;

pub use compose::{compose_hat, frame_element, gauge_act, moving_frame, normalize};
pub use envelope::upper_envelope;
pub use generators::{classify_rank3, decompose_generators, Rank3Type};
pub use permutahedron::{
    apply_word, permutahedron_chain, reduced_word, OrderedPartitionChain, PartitionEvent, WordError,
};
pub use regions::count_bounded_regions;
pub use symmetry::{concurrent_to_config, config_to_concurrent, p_reverse, z_project};
pub use tuple::{
    compose_normalized, decode_lines, decode_tuple, encode_tuple, MatrixTuple, NormalizedArrangement, Side, TupleError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("an arrangement needs at least two lines, got {0}")]
    TooFewLines(usize),
    #[error("root crossings are not strictly increasing at line {0}")]
    NotSorted(usize),
    #[error("lines {0} and {1} are parallel")]
    ParallelPair(usize, usize),
    #[error("lines {0} and {1} meet below the root line")]
    LowerHalfIntersection(usize, usize),
    #[error("gauge element does not stabilize the rooted half-plane")]
    InvalidGaugeElement,
    #[error("projection point must lie strictly above the root line")]
    DomainError,
    #[error("line {0} does not pass through the projection point")]
    NotConcurrent(usize),
    #[error("first line must be q = 0 and last line q + t = 1")]
    NotNormalized,
    #[error("operation expects rank {expected}, got {actual}")]
    WrongRank { expected: usize, actual: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootedLine {
    #[serde(with = "crate::rational::serde_str")]
    pub q: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub p: Rational,
}

impl RootedLine {
    pub fn new(q: Rational, p: Rational) -> Self {
        RootedLine { q, p }
    }

    /// Position at time `t`.
    pub fn q_at(&self, t: &Rational) -> Rational {
        &self.q + &self.p * t
    }

    pub fn to_line2(&self) -> Line2 {
        Line2::new(Rational::from_integer(1.into()), -&self.p, self.q.clone()).expect("a = 1 is nonzero")
    }

    /// Inverse of [`RootedLine::to_line2`]; `None` for lines parallel to the root.
    pub fn from_line2(l: &Line2) -> Option<Self> {
        use num_traits::Zero;
        if l.a().is_zero() {
            return None;
        }
        Some(RootedLine {
            q: l.c() / l.a(),
            p: -(l.b() / l.a()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawArrangement", into = "RawArrangement")]
pub struct Arrangement {
    lines: Vec<RootedLine>,
}

#[derive(Serialize, Deserialize)]
struct RawArrangement {
    lines: Vec<RootedLine>,
}

impl TryFrom<RawArrangement> for Arrangement {
    type Error = ArrangementError;

    fn try_from(raw: RawArrangement) -> Result<Self, Self::Error> {
        Arrangement::new(raw.lines)
    }
}

impl From<Arrangement> for RawArrangement {
    fn from(a: Arrangement) -> Self {
        RawArrangement { lines: a.lines }
    }
}

/// Checks the invariants and reports the first violation.
pub fn validate(raw: Vec<(Rational, Rational)>) -> Result<Arrangement, ArrangementError> {
    Arrangement::new(raw.into_iter().map(|(q, p)| RootedLine { q, p }).collect())
}

impl Arrangement {
    pub fn new(lines: Vec<RootedLine>) -> Result<Self, ArrangementError> {
        if lines.len() < 2 {
            return Err(ArrangementError::TooFewLines(lines.len()));
        }
        if let Some(k) = (1..lines.len()).find(|&k| lines[k - 1].q >= lines[k].q) {
            return Err(ArrangementError::NotSorted(k + 1));
        }
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                if lines[i].p == lines[j].p {
                    return Err(ArrangementError::ParallelPair(i + 1, j + 1));
                }
                if lines[i].p < lines[j].p {
                    return Err(ArrangementError::LowerHalfIntersection(i + 1, j + 1));
                }
            }
        }
        Ok(Arrangement { lines })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_lines_unchecked(lines: Vec<RootedLine>) -> Self {
        debug_assert!(Arrangement::new(lines.clone()).is_ok());
        Arrangement { lines }
    }

    /// The rank-2 template: `q = 0` and `q + t = 1`.
    pub fn template() -> Self {
        Arrangement {
            lines: vec![
                RootedLine::new(Rational::from_integer(0.into()), Rational::from_integer(0.into())),
                RootedLine::new(Rational::from_integer(1.into()), Rational::from_integer((-1).into())),
            ],
        }
    }

    pub fn lines(&self) -> &[RootedLine] {
        &self.lines
    }

    pub fn into_lines(self) -> Vec<RootedLine> {
        self.lines
    }

    pub fn rank(&self) -> usize {
        self.lines.len()
    }

    pub fn line(&self, k: usize) -> &RootedLine {
        &self.lines[k - 1]
    }

    pub fn first(&self) -> &RootedLine {
        &self.lines[0]
    }

    pub fn last(&self) -> &RootedLine {
        &self.lines[self.lines.len() - 1]
    }

    /// `(q_k, 0)`.
    pub fn root_point(&self, k: usize) -> Point2 {
        Point2::new(self.line(k).q.clone(), Rational::from_integer(0.into()))
    }

    pub fn crossing_time(&self, i: usize, j: usize) -> Rational {
        let (a, b) = (self.line(i), self.line(j));
        (&b.q - &a.q) / (&a.p - &b.p)
    }

    /// Intersection of lines `i ≠ j`.
    pub fn crossing(&self, i: usize, j: usize) -> Point2 {
        let t = self.crossing_time(i, j);
        Point2::new(self.line(i).q_at(&t), t)
    }

    /// The common point of all lines, if there is one.
    pub fn concurrency_point(&self) -> Option<Point2> {
        let x = self.crossing(1, self.rank());
        self.lines.iter().all(|l| l.to_line2().contains(&x)).then_some(x)
    }

    /// The chain `(qₖ, −pₖ)`.
    pub fn to_chain(&self) -> PolygonalChain {
        let pairs: Vec<_> = self.lines.iter().map(|l| (l.q.clone(), l.p.clone())).collect();
        chain::from_momenta(&pairs).expect("arrangement invariants make the chain monotone")
    }

    pub fn from_chain(c: &PolygonalChain) -> Self {
        Arrangement {
            lines: c
                .vertices()
                .iter()
                .map(|(q, s)| RootedLine::new(q.clone(), -s))
                .collect(),
        }
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, l) in self.lines.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}, {})", format_rational(&l.q), format_rational(&l.p))?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
pub(crate) fn arr(lines: &[(Rational, Rational)]) -> Arrangement {
    validate(lines.to_vec()).unwrap()
}

#[cfg(test)]
pub(crate) fn iarr(lines: &[(i64, i64)]) -> Arrangement {
    use crate::rational::int;
    validate(lines.iter().map(|&(q, p)| (int(q), int(p))).collect()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn raw(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(q, p)| (int(q), int(p))).collect()
    }

    #[test]
    fn validation_examples() {
        assert_eq!(validate(raw(&[(0, 0), (1, -1)])).unwrap(), Arrangement::template());
        assert_eq!(
            validate(raw(&[(0, 1), (1, 1)])),
            Err(ArrangementError::ParallelPair(1, 2))
        );
        assert_eq!(
            validate(raw(&[(0, -1), (1, 1)])),
            Err(ArrangementError::LowerHalfIntersection(1, 2))
        );
        assert_eq!(validate(raw(&[(0, 1), (0, 0)])), Err(ArrangementError::NotSorted(2)));
        assert_eq!(validate(raw(&[(0, 1)])), Err(ArrangementError::TooFewLines(1)));
    }

    #[test]
    fn pairs_are_reported_lexicographically() {
        assert_eq!(
            validate(raw(&[(0, 3), (1, 2), (2, 3), (3, 5)])),
            Err(ArrangementError::ParallelPair(1, 3))
        );
    }

    #[test]
    fn crossing_arithmetic() {
        let a = iarr(&[(0, 3), (1, 1), (2, 0)]);
        assert_eq!(a.crossing_time(1, 2), rat(1, 2));
        assert_eq!(a.crossing(1, 3), Point2::new(int(2), rat(2, 3)));
        assert_eq!(a.crossing(2, 3), Point2::new(int(2), int(1)));
        assert_eq!(a.concurrency_point(), None);
        let c = iarr(&[(0, 2), (1, 1), (2, 0)]);
        assert_eq!(c.concurrency_point(), Some(Point2::new(int(2), int(1))));
    }

    #[test]
    fn line_conversion_round_trips() {
        let l = RootedLine::new(rat(3, 2), rat(-5, 7));
        assert_eq!(RootedLine::from_line2(&l.to_line2()), Some(l));
    }

    #[test]
    fn json_form() {
        let a: Arrangement = serde_json::from_str(r#"{"lines":[{"q":"0","p":"0"},{"q":"1","p":"-1"}]}"#).unwrap();
        assert_eq!(a, Arrangement::template());
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"lines":[{"q":"0","p":"0"},{"q":"1","p":"-1"}]}"#
        );
        let bad = serde_json::from_str::<Arrangement>(r#"{"lines":[{"q":"0","p":"1"},{"q":"1","p":"1"}]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn chain_bridge() {
        let a = iarr(&[(0, 3), (1, 1), (2, 0)]);
        let c = a.to_chain();
        assert_eq!(c.vertices()[0], (int(0), int(-3)));
        assert_eq!(Arrangement::from_chain(&c), a);
    }
}
