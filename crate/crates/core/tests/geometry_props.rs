use arrangeops::geometry::{
    affine_from_triples, intersect, line_through, orientation, AffineMap2, Orientation, Point2,
};
use arrangeops::rational::Rational;
use arrangeops::sample::{seeded_rng, signed_rational, SampleRng};
use proptest::prelude::*;

fn point(rng: &mut SampleRng) -> Point2 {
    Point2::new(signed_rational(rng, 9, 4), signed_rational(rng, 9, 4))
}

fn triple(rng: &mut SampleRng) -> [Point2; 3] {
    loop {
        let t = [point(rng), point(rng), point(rng)];
        if orientation(&t[0], &t[1], &t[2]) != Orientation::Collinear {
            return t;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn triple_maps_hit_their_targets(seed in any::<u64>()) {
        let mut rng = seeded_rng(seed, 0);
        let src = triple(&mut rng);
        let dst = triple(&mut rng);
        let g = affine_from_triples([&src[0], &src[1], &src[2]], [&dst[0], &dst[1], &dst[2]]).unwrap();
        for k in 0..3 {
            prop_assert_eq!(g.apply(&src[k]), dst[k].clone());
        }
        let back = affine_from_triples([&dst[0], &dst[1], &dst[2]], [&src[0], &src[1], &src[2]]).unwrap();
        prop_assert_eq!(back, g.inverse());
        prop_assert_eq!(g.compose(&g.inverse()), AffineMap2::identity());
    }

    #[test]
    fn maps_carry_lines_and_intersections(seed in any::<u64>()) {
        let mut rng = seeded_rng(seed, 1);
        let [a, b, c] = triple(&mut rng);
        let dst = triple(&mut rng);
        let src = triple(&mut rng);
        let g = affine_from_triples([&src[0], &src[1], &src[2]], [&dst[0], &dst[1], &dst[2]]).unwrap();
        let l1 = line_through(&a, &b).unwrap();
        let l2 = line_through(&a, &c).unwrap();
        prop_assert_eq!(intersect(&l1, &l2).unwrap(), a.clone());
        prop_assert_eq!(g.apply_line(&l1), line_through(&g.apply(&a), &g.apply(&b)).unwrap());
        prop_assert!(g.apply_line(&l2).contains(&g.apply(&c)));
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        let mut rng = seeded_rng(seed, 2);
        let maps: Vec<AffineMap2> = (0..3)
            .map(|_| {
                let s = triple(&mut rng);
                let d = triple(&mut rng);
                affine_from_triples([&s[0], &s[1], &s[2]], [&d[0], &d[1], &d[2]]).unwrap()
            })
            .collect();
        let lhs = maps[0].compose(&maps[1]).compose(&maps[2]);
        let rhs = maps[0].compose(&maps[1].compose(&maps[2]));
        prop_assert_eq!(lhs, rhs);
        let x = point(&mut rng);
        prop_assert_eq!(maps[0].compose(&maps[1]).apply(&x), maps[0].apply(&maps[1].apply(&x)));
    }
}

#[test]
fn a_thousand_random_triple_maps() {
    for k in 0..1000 {
        let mut rng = seeded_rng(2024, k);
        let src = triple(&mut rng);
        let dst = triple(&mut rng);
        let g = affine_from_triples([&src[0], &src[1], &src[2]], [&dst[0], &dst[1], &dst[2]]).unwrap();
        assert!(src.iter().zip(&dst).all(|(s, d)| &g.apply(s) == d));
        assert_ne!(g.determinant(), Rational::from_integer(0.into()));
    }
}
