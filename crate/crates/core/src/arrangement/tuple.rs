//! Normalized arrangements as tuples of stabilizer matrices.
//!
//! For a normalized arrangement with root points `aₖ` and consecutive
//! crossings `(bₖ, cₖ)`, the `k`-th matrix is
//!
//! ```text
//! Tₖ = [[a_{k+1} − aₖ, bₖ − aₖ, aₖ], [0, cₖ, 0]]
//! ```
//!
//! It sends the template triangle bounded by `τ_L: q = 0`,
//! `τ_R: q + t = 1` and `τ₀: t = 0` onto the triangle of lines `k`, `k + 1`
//! and the root. Composition is the word operad over the affine group.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use super::{Arrangement, ArrangementError, RootedLine};
use crate::geometry::{AffineMap2, Line2};
use crate::operad::{word_compose, IndexOutOfRange, Operad, Word};
use crate::rational::Rational;

/// An [`Arrangement`] whose outer lines are `q = 0` and `q + t = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalizedArrangement(Arrangement);

impl NormalizedArrangement {
    pub fn new(a: Arrangement) -> Result<Self, ArrangementError> {
        let template = Arrangement::template();
        if a.first() != template.first() || a.last() != template.last() {
            return Err(ArrangementError::NotNormalized);
        }
        Ok(NormalizedArrangement(a))
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.0
    }

    pub fn into_inner(self) -> Arrangement {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TupleError {
    #[error("a tuple needs at least one matrix")]
    Empty,
    #[error("matrix {0} is not of stabilizer form")]
    NotStabilizer(usize),
    #[error("matrices {index} and {next} do not share their boundary line", next = .index + 1)]
    MatchingViolation { index: usize },
    #[error("the {side} outer line is not fixed")]
    NormalizationViolation { side: Side },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

fn tau_l() -> Line2 {
    Line2::new(Rational::one(), Rational::zero(), Rational::zero()).expect("q = 0")
}

fn tau_r() -> Line2 {
    Line2::new(Rational::one(), Rational::one(), Rational::one()).expect("q + t = 1")
}

/// Stabilizer matrices satisfying `Tₖ·τ_R = T_{k+1}·τ_L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixTuple {
    matrices: Vec<AffineMap2>,
}

impl MatrixTuple {
    pub fn new(matrices: Vec<AffineMap2>) -> Result<Self, TupleError> {
        if matrices.is_empty() {
            return Err(TupleError::Empty);
        }
        if let Some(k) = matrices.iter().position(|m| !m.is_stabilizer()) {
            return Err(TupleError::NotStabilizer(k + 1));
        }
        for k in 1..matrices.len() {
            if matrices[k - 1].apply_line(&tau_r()) != matrices[k].apply_line(&tau_l()) {
                return Err(TupleError::MatchingViolation { index: k });
            }
        }
        Ok(MatrixTuple { matrices })
    }

    /// Like [`MatrixTuple::new`], additionally requiring `T₁·τ_L = τ_L`
    /// and `T_n·τ_R = τ_R`.
    pub fn normalized(matrices: Vec<AffineMap2>) -> Result<Self, TupleError> {
        let t = MatrixTuple::new(matrices)?;
        t.check_normalization()?;
        Ok(t)
    }

    pub fn check_normalization(&self) -> Result<(), TupleError> {
        if self.matrices[0].apply_line(&tau_l()) != tau_l() {
            return Err(TupleError::NormalizationViolation { side: Side::Left });
        }
        if self.matrices[self.matrices.len() - 1].apply_line(&tau_r()) != tau_r() {
            return Err(TupleError::NormalizationViolation { side: Side::Right });
        }
        Ok(())
    }

    pub fn matrices(&self) -> &[AffineMap2] {
        &self.matrices
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

pub fn encode_tuple(n: &NormalizedArrangement) -> MatrixTuple {
    let a = n.arrangement();
    let matrices = (1..a.rank())
        .map(|k| {
            let ak = &a.line(k).q;
            let next = &a.line(k + 1).q;
            let x = a.crossing(k, k + 1);
            AffineMap2::new(
                next - ak,
                &x.q - ak,
                ak.clone(),
                Rational::zero(),
                x.t,
                Rational::zero(),
            )
            .expect("consecutive root points and their crossing span a triangle")
        })
        .collect();
    MatrixTuple { matrices }
}

/// Line 1 is `T₁·τ_L` and line `k + 1` is `Tₖ·τ_R`.
pub fn decode_lines(w: &MatrixTuple) -> Result<Arrangement, ArrangementError> {
    let to_rooted = |l: Line2| RootedLine::from_line2(&l).expect("stabilizers keep lines transverse");
    let mut lines = Vec::with_capacity(w.len() + 1);
    lines.push(to_rooted(w.matrices[0].apply_line(&tau_l())));
    lines.extend(w.matrices.iter().map(|m| to_rooted(m.apply_line(&tau_r()))));
    Arrangement::new(lines)
}

pub fn decode_tuple(w: &MatrixTuple) -> Result<NormalizedArrangement, TupleError> {
    w.check_normalization()?;
    Ok(NormalizedArrangement::new(decode_lines(w)?)?)
}

/// `(T₁,…,T_{i−1}, TᵢS₁,…,TᵢS_m, T_{i+1},…,T_n)`.
pub fn compose_normalized(a: &MatrixTuple, i: usize, b: &MatrixTuple) -> Result<MatrixTuple, IndexOutOfRange> {
    let wa = Word::new(a.matrices.clone()).expect("tuples are nonempty");
    let wb = Word::new(b.matrices.clone()).expect("tuples are nonempty");
    Ok(MatrixTuple {
        matrices: word_compose(&wa, i, &wb)?.into_letters(),
    })
}

impl Operad for MatrixTuple {
    fn arity(&self) -> usize {
        self.len()
    }

    fn compose(&self, i: usize, other: &Self) -> Result<Self, IndexOutOfRange> {
        compose_normalized(self, i, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::arr;
    use crate::rational::{int, rat};

    #[test]
    fn template_encodes_to_the_identity() {
        let n = NormalizedArrangement::new(Arrangement::template()).unwrap();
        let w = encode_tuple(&n);
        assert_eq!(w.matrices(), &[AffineMap2::identity()]);
        assert_eq!(decode_tuple(&w).unwrap(), n);
    }

    #[test]
    fn rank_three_encoding() {
        let a = arr(&[(int(0), int(0)), (rat(1, 2), rat(-1, 2)), (int(1), int(-1))]);
        let n = NormalizedArrangement::new(a).unwrap();
        let w = encode_tuple(&n);
        // all three lines pass through (0, 1)
        let expected = vec![
            AffineMap2::new(rat(1, 2), int(0), int(0), int(0), int(1), int(0)).unwrap(),
            AffineMap2::new(rat(1, 2), rat(-1, 2), rat(1, 2), int(0), int(1), int(0)).unwrap(),
        ];
        assert_eq!(w.matrices(), expected.as_slice());
        assert!(MatrixTuple::normalized(expected).is_ok());
        assert_eq!(decode_tuple(&w).unwrap(), n);
    }

    #[test]
    fn violations_are_reported() {
        let shift = AffineMap2::translation(int(1), int(0));
        assert_eq!(
            MatrixTuple::new(vec![AffineMap2::identity(), AffineMap2::identity()]),
            Err(TupleError::MatchingViolation { index: 1 })
        );
        assert_eq!(
            MatrixTuple::normalized(vec![shift]),
            Err(TupleError::NormalizationViolation { side: Side::Left })
        );
        let widen = AffineMap2::new(int(2), int(0), int(0), int(0), int(1), int(0)).unwrap();
        assert_eq!(
            MatrixTuple::normalized(vec![widen]),
            Err(TupleError::NormalizationViolation { side: Side::Right })
        );
        let reflect = AffineMap2::new(int(1), int(0), int(0), int(0), int(-1), int(0)).unwrap();
        assert_eq!(MatrixTuple::new(vec![reflect]), Err(TupleError::NotStabilizer(1)));
    }

    #[test]
    fn unnormalized_tuples_still_decode_to_arrangements() {
        let w = MatrixTuple::new(vec![AffineMap2::translation(int(2), int(0))]).unwrap();
        assert_eq!(decode_lines(&w).unwrap(), arr(&[(int(2), int(0)), (int(3), int(-1))]));
    }
}
