//! Partial composition of rooted arrangements and the moving frame.

use num_traits::Zero;

use super::{Arrangement, ArrangementError, RootedLine};
use crate::geometry::{affine_from_triples, AffineMap2};
use crate::operad::{check_slot, IndexOutOfRange};
use crate::rational::Rational;

fn map_line(g: &AffineMap2, l: &RootedLine) -> RootedLine {
    RootedLine::from_line2(&g.apply_line(&l.to_line2())).expect("stabilizer maps keep lines transverse to the root")
}

/// `P ∘ᵢ Q`: the affine image of `Q` fitted into the triangle of lines
/// `i`, `i + 1` and the root.
///
/// ```
/// use arrangeops::arrangement::{compose_hat, validate};
/// use arrangeops::rational::rat;
///
/// let p = validate(vec![(rat(-1, 1), rat(1, 1)), (rat(0, 1), rat(0, 1)), (rat(1, 1), rat(-1, 1))]).unwrap();
/// let q = validate(vec![(rat(0, 1), rat(1, 2)), (rat(1, 2), rat(0, 1)), (rat(1, 1), rat(-1, 2))]).unwrap();
/// let out = compose_hat(&p, 1, &q).unwrap();
/// assert_eq!(out.to_string(), "((-1, 1), (-1/2, 1/2), (0, 0), (1, -1))");
/// ```
pub fn compose_hat(p: &Arrangement, i: usize, q: &Arrangement) -> Result<Arrangement, IndexOutOfRange> {
    check_slot(i, p.rank() - 1)?;
    let t = affine_from_triples(
        [&q.root_point(1), &q.crossing(1, q.rank()), &q.root_point(q.rank())],
        [&p.root_point(i), &p.crossing(i, i + 1), &p.root_point(i + 1)],
    )
    .expect("root points and a crossing above the root are never collinear");
    let inner = &q.lines()[1..q.rank() - 1];
    let mut lines = Vec::with_capacity(p.rank() + inner.len());
    lines.extend_from_slice(&p.lines()[..i]);
    lines.extend(inner.iter().map(|l| map_line(&t, l)));
    lines.extend_from_slice(&p.lines()[i..]);
    Ok(Arrangement::from_lines_unchecked(lines))
}

impl crate::operad::Operad for Arrangement {
    fn arity(&self) -> usize {
        self.rank() - 1
    }

    fn compose(&self, i: usize, other: &Self) -> Result<Self, IndexOutOfRange> {
        compose_hat(self, i, other)
    }
}

/// `ρ(P)`: sends `(0,0) ↦ P₁`, `(1,0) ↦ P_last`, `(0,1) ↦ P_{1,last}`.
pub fn moving_frame(p: &Arrangement) -> AffineMap2 {
    let a1 = &p.first().q;
    let a_last = &p.last().q;
    let x = p.crossing(1, p.rank());
    AffineMap2::new(
        a_last - a1,
        &x.q - a1,
        a1.clone(),
        Rational::zero(),
        x.t,
        Rational::zero(),
    )
    .expect("the frame triple is not collinear")
}

/// `(ρ(P)⁻¹·P, ρ(P))`.
pub fn normalize(p: &Arrangement) -> (super::NormalizedArrangement, AffineMap2) {
    let rho = moving_frame(p);
    let normalized = gauge_act_unchecked(&rho.inverse(), p);
    (
        super::NormalizedArrangement::new(normalized).expect("ρ⁻¹ sends the outer lines to the template"),
        rho,
    )
}

pub(crate) fn gauge_act_unchecked(g: &AffineMap2, p: &Arrangement) -> Arrangement {
    Arrangement::from_lines_unchecked(p.lines().iter().map(|l| map_line(g, l)).collect())
}

/// `g·P` for `g` preserving the root line, its orientation and the upper half-plane.
pub fn gauge_act(g: &AffineMap2, p: &Arrangement) -> Result<Arrangement, ArrangementError> {
    if !g.is_stabilizer() {
        return Err(ArrangementError::InvalidGaugeElement);
    }
    Ok(gauge_act_unchecked(g, p))
}

/// The rank-2 arrangement framed by `g`, identifying `G` with arity one.
pub fn frame_element(g: &AffineMap2) -> Result<Arrangement, ArrangementError> {
    gauge_act(g, &Arrangement::template())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{arr, iarr};
    use crate::geometry::Point2;
    use crate::operad::{check_sequential, Operad};
    use crate::rational::{int, rat};

    fn concurrent_p() -> Arrangement {
        iarr(&[(-1, 1), (0, 0), (1, -1)])
    }

    fn concurrent_q() -> Arrangement {
        arr(&[(int(0), rat(1, 2)), (rat(1, 2), int(0)), (int(1), rat(-1, 2))])
    }

    #[test]
    fn rank_two_is_a_unit() {
        let p = iarr(&[(0, 3), (1, 1), (2, 0)]);
        let e = iarr(&[(5, 2), (7, -4)]);
        for i in 1..=2 {
            assert_eq!(compose_hat(&p, i, &e).unwrap(), p);
        }
        assert_eq!(
            compose_hat(&e, 1, &p).unwrap(),
            gauge_act(&moving_frame(&e), &normalize(&p).0.into_inner()).unwrap()
        );
    }

    #[test]
    fn concurrent_example() {
        let out = compose_hat(&concurrent_p(), 1, &concurrent_q()).unwrap();
        assert_eq!(
            out,
            arr(&[
                (int(-1), int(1)),
                (rat(-1, 2), rat(1, 2)),
                (int(0), int(0)),
                (int(1), int(-1))
            ])
        );
    }

    #[test]
    fn slot_map_of_the_concurrent_example() {
        let p = concurrent_p();
        let q = concurrent_q();
        let t = affine_from_triples(
            [&q.root_point(1), &q.crossing(1, 3), &q.root_point(3)],
            [&p.root_point(1), &p.crossing(1, 2), &p.root_point(2)],
        )
        .unwrap();
        let shear = AffineMap2::new(int(1), rat(1, 2), int(-1), int(0), int(1), int(0)).unwrap();
        assert_eq!(t, shear);
    }

    #[test]
    fn frame_of_a_normalized_arrangement_is_trivial() {
        let p = arr(&[(int(0), int(0)), (rat(1, 2), rat(-1, 2)), (int(1), int(-1))]);
        assert_eq!(moving_frame(&p), AffineMap2::identity());
    }

    #[test]
    fn frame_of_the_concurrent_example() {
        let p = concurrent_p();
        let rho = moving_frame(&p);
        assert_eq!(rho.apply(&Point2::new(int(0), int(0))), Point2::new(int(-1), int(0)));
        assert_eq!(rho.apply(&Point2::new(int(1), int(0))), Point2::new(int(1), int(0)));
        assert_eq!(rho.apply(&Point2::new(int(0), int(1))), Point2::new(int(0), int(1)));
        let (n, _) = normalize(&p);
        assert_eq!(n.arrangement().first(), &RootedLine::new(int(0), int(0)));
        assert_eq!(n.arrangement().last(), &RootedLine::new(int(1), int(-1)));
    }

    #[test]
    fn translation_gauge() {
        let p = iarr(&[(0, 3), (1, 1), (2, 0)]);
        let g = AffineMap2::translation(int(3), int(0));
        assert_eq!(gauge_act(&g, &p).unwrap(), iarr(&[(3, 3), (4, 1), (5, 0)]));
        let flip = AffineMap2::new(int(-1), int(0), int(0), int(0), int(1), int(0)).unwrap();
        assert_eq!(gauge_act(&flip, &p), Err(ArrangementError::InvalidGaugeElement));
    }

    #[test]
    fn arity_one_composition_keeps_the_outer_frame() {
        let g = AffineMap2::new(int(2), int(1), int(3), int(0), rat(1, 2), int(0)).unwrap();
        let h = AffineMap2::new(rat(1, 3), int(-1), int(0), int(0), int(4), int(0)).unwrap();
        let eg = frame_element(&g).unwrap();
        let eh = frame_element(&h).unwrap();
        assert_eq!(moving_frame(&eg), g);
        assert_eq!(compose_hat(&eg, 1, &eh).unwrap(), eg);
    }

    #[test]
    fn small_sequential_instance() {
        let a = iarr(&[(0, 3), (1, 1), (2, 0)]);
        let b = iarr(&[(0, 2), (1, 1), (2, 0)]);
        let c = arr(&[(int(0), int(5)), (rat(1, 3), int(1)), (int(4), int(-2))]);
        for i in 1..=2 {
            for j in i..=i + 1 {
                assert!(check_sequential(&a, &b, &c, i, j).unwrap().holds());
            }
        }
        assert_eq!(a.compose(2, &b).unwrap().rank(), 4);
    }
}
