//! Random valid elements of every operad in the crate, and the law suites
//! addressed by name.

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::arrangement::{
    config_to_concurrent, encode_tuple, Arrangement, MatrixTuple, NormalizedArrangement, RootedLine,
};
use crate::chain::PolygonalChain;
use crate::geometry::{AffineMap2, Point2};
use crate::interval::{IntervalConfig, IntervalTiling, PointConfig};
use crate::operad::{run_law_suite, LawSuiteReport, PlanarTree, PositiveRational, Word};
use crate::rational::Rational;
use crate::sample::{increasing, positive_rational, signed_rational, simplex_point, SampleRng};

pub fn tiling(rng: &mut SampleRng) -> IntervalTiling {
    let n = rng.gen_range(1..=4);
    IntervalTiling::new(simplex_point(rng, n)).expect("simplex points are tilings")
}

pub fn interval_config(rng: &mut SampleRng) -> IntervalConfig {
    let n = rng.gen_range(1..=3);
    // alternate gaps and intervals; gaps may be empty
    let weights = simplex_point(rng, 2 * n + 1);
    let mut at = Rational::zero();
    let mut intervals = Vec::with_capacity(n);
    for k in 0..n {
        if rng.gen_bool(0.5) {
            at += &weights[2 * k];
        }
        let end = &at + &weights[2 * k + 1];
        intervals.push((at.clone(), end.clone()));
        at = end;
    }
    IntervalConfig::new(intervals).expect("constructed ordered and disjoint")
}

pub fn points(rng: &mut SampleRng) -> PointConfig {
    let n = rng.gen_range(2..=5);
    let start = signed_rational(rng, 6, 3);
    PointConfig::new(increasing(rng, n, start)).expect("increasing")
}

pub fn chain(rng: &mut SampleRng) -> PolygonalChain {
    let n = rng.gen_range(2..=5);
    let q0 = signed_rational(rng, 6, 3);
    let s0 = signed_rational(rng, 6, 3);
    let qs = increasing(rng, n, q0);
    let ss = increasing(rng, n, s0);
    PolygonalChain::new(qs.into_iter().zip(ss).collect()).expect("both coordinates increase")
}

pub fn word(rng: &mut SampleRng) -> Word<PositiveRational> {
    let n = rng.gen_range(1..=4);
    Word::new(
        (0..n)
            .map(|_| PositiveRational::new(positive_rational(rng, 9, 5)).expect("positive"))
            .collect(),
    )
    .expect("nonempty")
}

pub fn tree(rng: &mut SampleRng) -> PlanarTree {
    if rng.gen_ratio(1, 8) {
        return PlanarTree::Leaf;
    }
    let mut t = PlanarTree::corolla(rng.gen_range(1..=3));
    for _ in 0..rng.gen_range(0..=2) {
        let i = rng.gen_range(1..=t.leaf_count());
        let c = PlanarTree::corolla(rng.gen_range(1..=3));
        t = crate::operad::graft(&t, i, &c).expect("slot in range");
    }
    t
}

fn lines_from(qs: Vec<Rational>, ps: Vec<Rational>) -> Arrangement {
    Arrangement::new(qs.into_iter().zip(ps).map(|(q, p)| RootedLine::new(q, p)).collect())
        .expect("q increasing and p decreasing")
}

/// Rank uniform in `2..=max_rank`.
pub fn arrangement_up_to(rng: &mut SampleRng, max_rank: usize) -> Arrangement {
    let rank = rng.gen_range(2..=max_rank);
    arrangement_of_rank(rng, rank)
}

pub fn arrangement_of_rank(rng: &mut SampleRng, rank: usize) -> Arrangement {
    let q0 = signed_rational(rng, 6, 3);
    let qs = increasing(rng, rank, q0);
    let p0 = signed_rational(rng, 6, 3);
    let mut ps = increasing(rng, rank, p0);
    ps.reverse();
    lines_from(qs, ps)
}

pub fn arrangement(rng: &mut SampleRng) -> Arrangement {
    arrangement_up_to(rng, 5)
}

/// All pairwise crossing times distinct; in particular no three lines meet.
pub fn generic_arrangement(rng: &mut SampleRng, rank: usize) -> Arrangement {
    loop {
        let a = arrangement_of_rank(rng, rank);
        let mut times: Vec<Rational> = (1..=rank)
            .flat_map(|i| (i + 1..=rank).map(move |j| (i, j)))
            .map(|(i, j)| a.crossing_time(i, j))
            .collect();
        let total = times.len();
        times.sort();
        times.dedup();
        if times.len() == total {
            return a;
        }
    }
}

pub fn upper_point(rng: &mut SampleRng) -> Point2 {
    Point2::new(signed_rational(rng, 6, 3), positive_rational(rng, 6, 3))
}

pub fn concurrent_arrangement(rng: &mut SampleRng, rank: usize, at: &Point2) -> Arrangement {
    let q0 = signed_rational(rng, 6, 3);
    let qs = increasing(rng, rank, q0);
    config_to_concurrent(&PointConfig::new(qs).expect("increasing"), at).expect("point above root")
}

/// Strictly increasing values in the open interval `(0, 1)`.
fn inside_unit(rng: &mut SampleRng, len: usize) -> Vec<Rational> {
    let w = simplex_point(rng, len + 1);
    let mut acc = Rational::zero();
    w[..len]
        .iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

pub fn normalized_arrangement(rng: &mut SampleRng) -> NormalizedArrangement {
    let interior = rng.gen_range(0..=3);
    let mut qs = vec![Rational::zero()];
    qs.extend(inside_unit(rng, interior));
    qs.push(Rational::one());
    let mut ps = vec![Rational::zero()];
    ps.extend(inside_unit(rng, interior).into_iter().map(|x| -x));
    ps.push(-Rational::one());
    NormalizedArrangement::new(lines_from(qs, ps)).expect("outer lines are the template")
}

pub fn matrix_tuple(rng: &mut SampleRng) -> MatrixTuple {
    encode_tuple(&normalized_arrangement(rng))
}

/// `(q, t) ↦ (αq + βt + γ, ct)` with `α, c > 0`.
pub fn stabilizer(rng: &mut SampleRng) -> AffineMap2 {
    AffineMap2::new(
        positive_rational(rng, 5, 3),
        signed_rational(rng, 5, 3),
        signed_rational(rng, 5, 3),
        Rational::zero(),
        positive_rational(rng, 5, 3),
        Rational::zero(),
    )
    .expect("nonsingular")
}

pub const OPERAD_NAMES: [&str; 8] = [
    "tiling",
    "intervals",
    "points",
    "chain",
    "word",
    "tree",
    "arrangement",
    "tuple",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown operad `{0}`; expected one of tiling, intervals, points, chain, word, tree, arrangement, tuple")]
pub struct UnknownOperad(pub String);

/// Both associativity suites for the operad called `name`.
pub fn run_named_law_suite(name: &str, samples: usize, seed: u64) -> Result<LawSuiteReport, UnknownOperad> {
    Ok(match name {
        "tiling" => run_law_suite(&tiling, samples, seed),
        "intervals" => run_law_suite(&interval_config, samples, seed),
        "points" => run_law_suite(&points, samples, seed),
        "chain" => run_law_suite(&chain, samples, seed),
        "word" => run_law_suite(&word, samples, seed),
        "tree" => run_law_suite(&tree, samples, seed),
        "arrangement" => run_law_suite(&arrangement, samples, seed),
        "tuple" => run_law_suite(&matrix_tuple, samples, seed),
        _ => return Err(UnknownOperad(name.to_string())),
    })
}
