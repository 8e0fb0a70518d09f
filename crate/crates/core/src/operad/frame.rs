//! Lifting an operad structure along a moving frame.
//!
//! Let a group `G` act on a graded collection `Q`, and let `ρ: Q → G` be
//! equivariant, `ρ(g·z) = g·ρ(z)`. The elements with `ρ(z) = e` form a slice.
//! If the slice is an operad, then
//!
//! ```text
//! a *ᵢ b = ρ(a) · [ (ρ(a)⁻¹·a) ∘ᵢ (ρ(b)⁻¹·b) ]
//! ```
//!
//! makes all of `Q` an operad, and `ρ(a *ᵢ b) = ρ(a)`.

use crate::geometry::AffineMap2;
use crate::operad::word::Monoid;

use super::IndexOutOfRange;

pub trait GroupElement: Clone {
    fn inverse(&self) -> Self;
}

impl GroupElement for AffineMap2 {
    fn inverse(&self) -> Self {
        AffineMap2::inverse(self)
    }
}

impl Monoid for AffineMap2 {
    fn identity() -> Self {
        AffineMap2::identity()
    }

    fn mul(&self, other: &Self) -> Self {
        self.compose(other)
    }
}

/// `ρ(a)·[(ρ(a)⁻¹·a) ∘ᵢ (ρ(b)⁻¹·b)]` where `∘ᵢ` is `slice_compose`.
pub fn moving_frame_compose<Q, G, Rho, Act, Slice>(
    a: &Q,
    i: usize,
    b: &Q,
    rho: Rho,
    act: Act,
    slice_compose: Slice,
) -> Result<Q, IndexOutOfRange>
where
    G: GroupElement,
    Rho: Fn(&Q) -> G,
    Act: Fn(&G, &Q) -> Q,
    Slice: Fn(&Q, usize, &Q) -> Result<Q, IndexOutOfRange>,
{
    let frame_a = rho(a);
    let frame_b = rho(b);
    let a0 = act(&frame_a.inverse(), a);
    let b0 = act(&frame_b.inverse(), b);
    let composed = slice_compose(&a0, i, &b0)?;
    Ok(act(&frame_a, &composed))
}
