//! Seeded random generators for exact test data.
//!
//! Every law suite draws sample `k` from its own ChaCha stream, so a sample
//! never depends on the order in which samples are evaluated.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rational::Rational;

pub type SampleRng = ChaCha8Rng;

/// RNG for sample `stream` of a run seeded with `seed`.
pub fn seeded_rng(seed: u64, stream: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A positive rational `n/d` with `1 ≤ n ≤ max_num`, `1 ≤ d ≤ max_den`.
pub fn positive_rational<R: Rng + ?Sized>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    let n = rng.gen_range(1..=max_num);
    let d = rng.gen_range(1..=max_den);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A rational `n/d` with `|n| ≤ max_num`, `1 ≤ d ≤ max_den`.
pub fn signed_rational<R: Rng + ?Sized>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    let n = rng.gen_range(-max_num..=max_num);
    let d = rng.gen_range(1..=max_den);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `len` strictly increasing rationals starting at `start`.
pub fn increasing<R: Rng + ?Sized>(rng: &mut R, len: usize, start: Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut current = start;
    for k in 0..len {
        if k > 0 {
            current += positive_rational(rng, 5, 4);
        }
        out.push(current.clone());
    }
    out
}

/// `len ≥ 1` positive rationals summing to exactly one.
pub fn simplex_point<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Rational> {
    let weights: Vec<Rational> = (0..len).map(|_| positive_rational(rng, 7, 3)).collect();
    let total: Rational = weights.iter().sum();
    weights.into_iter().map(|w| w / &total).collect()
}
