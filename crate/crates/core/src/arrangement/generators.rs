//! Decomposition into rank-3 generators and their combinatorial types.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{Arrangement, ArrangementError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rank3Type {
    /// The middle line passes left of the crossing of the outer lines.
    MiddleLeft,
    Concurrent,
    MiddleRight,
}

impl Rank3Type {
    pub fn mirrored(self) -> Self {
        match self {
            Rank3Type::MiddleLeft => Rank3Type::MiddleRight,
            Rank3Type::Concurrent => Rank3Type::Concurrent,
            Rank3Type::MiddleRight => Rank3Type::MiddleLeft,
        }
    }
}

pub fn classify_rank3(p: &Arrangement) -> Result<Rank3Type, ArrangementError> {
    if p.rank() != 3 {
        return Err(ArrangementError::WrongRank {
            expected: 3,
            actual: p.rank(),
        });
    }
    let x = p.crossing(1, 3);
    Ok(match p.line(2).q_at(&x.t).cmp(&x.q) {
        Ordering::Less => Rank3Type::MiddleLeft,
        Ordering::Equal => Rank3Type::Concurrent,
        Ordering::Greater => Rank3Type::MiddleRight,
    })
}

fn pick(p: &Arrangement, indices: &[usize]) -> Arrangement {
    Arrangement::from_lines_unchecked(indices.iter().map(|&k| p.line(k).clone()).collect())
}

/// A rank-2 base and rank-3 generators with their slots, in replay order:
/// `((base ∘_{s₁} g₁) ∘_{s₂} g₂) ⋯` equals `p`.
///
/// Peeling removes the penultimate line: `P = P′ ∘_{r−2} M` where `P′`
/// drops line `r − 1` and `M` is lines `r − 2, r − 1, r`. The slot map is
/// the identity at every step.
///
/// ```
/// use arrangeops::arrangement::{compose_hat, decompose_generators, validate};
/// use arrangeops::rational::int;
///
/// let p = validate((0..5).map(|k| (int(k), int(-k * k))).collect()).unwrap();
/// let (base, gens) = decompose_generators(&p);
/// let rebuilt = gens.iter().fold(base, |acc, (slot, g)| compose_hat(&acc, *slot, g).unwrap());
/// assert_eq!(rebuilt, p);
/// ```
pub fn decompose_generators(p: &Arrangement) -> (Arrangement, Vec<(usize, Arrangement)>) {
    let r = p.rank();
    let base = pick(p, &[1, r]);
    let gens = (3..=r).map(|k| (k - 2, pick(p, &[k - 2, k - 1, r]))).collect();
    (base, gens)
}
