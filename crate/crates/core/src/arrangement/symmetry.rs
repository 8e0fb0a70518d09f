//! Reversal of the root line, projection onto concurrent arrangements, and
//! the identification of concurrent arrangements with point configurations.

use num_traits::Signed;

use super::{Arrangement, ArrangementError, RootedLine};
use crate::geometry::Point2;
use crate::interval::PointConfig;

/// Reverses the orientation of the root line: `(qₖ, pₖ) ↦ (−q, −p)` with
/// the line order reversed. An involution, and
/// `π(P ∘ᵢ Q) = π(P) ∘_{m−i+1} π(Q)` for `m = arity(P)`.
pub fn p_reverse(p: &Arrangement) -> Arrangement {
    Arrangement::from_lines_unchecked(p.lines().iter().rev().map(|l| RootedLine::new(-&l.q, -&l.p)).collect())
}

/// Slides every line parallel to itself until it passes through `a`.
pub fn z_project(p: &Arrangement, a: &Point2) -> Result<Arrangement, ArrangementError> {
    if !a.t.is_positive() {
        return Err(ArrangementError::DomainError);
    }
    Ok(Arrangement::from_lines_unchecked(
        p.lines()
            .iter()
            .map(|l| RootedLine::new(&a.q - &l.p * &a.t, l.p.clone()))
            .collect(),
    ))
}

/// The root crossings of an arrangement concurrent at `a`.
pub fn concurrent_to_config(p: &Arrangement, a: &Point2) -> Result<PointConfig, ArrangementError> {
    if !a.t.is_positive() {
        return Err(ArrangementError::DomainError);
    }
    if let Some(k) = p.lines().iter().position(|l| !l.to_line2().contains(a)) {
        return Err(ArrangementError::NotConcurrent(k + 1));
    }
    Ok(PointConfig::new(p.lines().iter().map(|l| l.q.clone()).collect())
        .expect("root crossings are strictly increasing"))
}

/// The pencil through `a` crossing the root at the given points.
pub fn config_to_concurrent(c: &PointConfig, a: &Point2) -> Result<Arrangement, ArrangementError> {
    if !a.t.is_positive() {
        return Err(ArrangementError::DomainError);
    }
    Ok(Arrangement::from_lines_unchecked(
        c.points()
            .iter()
            .map(|q| RootedLine::new(q.clone(), (&a.q - q) / &a.t))
            .collect(),
    ))
}
