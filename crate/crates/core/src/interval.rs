//! Operads of subintervals, tilings and point configurations on a line.
//!
//! * [`IntervalConfig`] – little 1-disks: ordered subintervals of `[0, 1]`
//!   with disjoint interiors, composed through affine rescaling.
//! * [`IntervalTiling`] – tilings of `[0, 1]` by `n` consecutive intervals,
//!   recorded by their lengths. Composition multiplies the inserted lengths
//!   by the length of the target tile.
//! * [`PointConfig`] – `n + 1` increasing points anywhere on the line, an
//!   element of arity `n`. Composition maps the inserted configuration onto
//!   the `i`-th gap, endpoints to endpoints. It is the moving-frame lift of
//!   the tiling operad along `ρ(z) = (x ↦ span(z)·x + first(z))`.
//!
//! [`AffineWord1`] encodes a configuration as a word of 1-D affine maps
//! `x ↦ λₖx + bₖ`, one per gap, subject to `λₖ + bₖ = bₖ₊₁`.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::operad::{check_slot, GroupElement, IndexOutOfRange, Monoid, Operad};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("configuration needs at least {min} entries")]
    TooShort { min: usize },
    #[error("interval {index} is not a nontrivial subinterval of [0, 1]")]
    BadInterval { index: usize },
    #[error("intervals {index} and {next} overlap or are out of order", next = .index + 1)]
    Overlap { index: usize },
    #[error("tile {index} has non-positive length")]
    NonPositiveLength { index: usize },
    #[error("tile lengths sum to {sum}, not 1")]
    BadSum { sum: Rational },
    #[error("points are not strictly increasing at position {index}")]
    NotIncreasing { index: usize },
    #[error("letter {index} violates the matching condition λᵢ + bᵢ = bᵢ₊₁")]
    MatchingViolation { index: usize },
    #[error("letter {index} has non-positive scale")]
    NonPositiveScale { index: usize },
    #[error("parameters outside the domain α, β > 0, α + β < 1")]
    DomainError,
}

/// `x ↦ scale·x + shift` with `scale > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineMap1 {
    pub scale: Rational,
    pub shift: Rational,
}

impl AffineMap1 {
    pub fn new(scale: Rational, shift: Rational) -> Option<Self> {
        scale.is_positive().then_some(AffineMap1 { scale, shift })
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        &self.scale * x + &self.shift
    }

    /// The orientation-preserving map sending `[from_lo, from_hi]` onto
    /// `[to_lo, to_hi]`.
    fn between(from_lo: &Rational, from_hi: &Rational, to_lo: &Rational, to_hi: &Rational) -> Self {
        let scale = (to_hi - to_lo) / (from_hi - from_lo);
        let shift = to_lo - &scale * from_lo;
        AffineMap1 { scale, shift }
    }
}

impl Monoid for AffineMap1 {
    fn identity() -> Self {
        AffineMap1 {
            scale: Rational::one(),
            shift: Rational::zero(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        AffineMap1 {
            scale: &self.scale * &other.scale,
            shift: &self.scale * &other.shift + &self.shift,
        }
    }
}

impl GroupElement for AffineMap1 {
    fn inverse(&self) -> Self {
        let scale = Rational::one() / &self.scale;
        let shift = -(&self.shift * &scale);
        AffineMap1 { scale, shift }
    }
}

/// Ordered closed subintervals of `[0, 1]` with pairwise disjoint interiors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalConfig {
    intervals: Vec<(Rational, Rational)>,
}

impl IntervalConfig {
    pub fn new(intervals: Vec<(Rational, Rational)>) -> Result<Self, IntervalError> {
        if intervals.is_empty() {
            return Err(IntervalError::TooShort { min: 1 });
        }
        for (k, (lo, hi)) in intervals.iter().enumerate() {
            if lo.is_negative() || lo >= hi || *hi > Rational::one() {
                return Err(IntervalError::BadInterval { index: k + 1 });
            }
        }
        for k in 1..intervals.len() {
            if intervals[k - 1].1 > intervals[k].0 {
                return Err(IntervalError::Overlap { index: k });
            }
        }
        Ok(IntervalConfig { intervals })
    }

    /// The single interval `[0, 1]`.
    pub fn unit() -> Self {
        IntervalConfig {
            intervals: vec![(Rational::zero(), Rational::one())],
        }
    }

    /// `[0, 1/3] ∪ [2/3, 1]`, the generator of the pre-Cantor suboperad.
    pub fn cantor_generator() -> Self {
        let third = Rational::new(1.into(), 3.into());
        IntervalConfig {
            intervals: vec![
                (Rational::zero(), third.clone()),
                (Rational::one() - &third, Rational::one()),
            ],
        }
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

pub fn d1_compose(a: &IntervalConfig, i: usize, b: &IntervalConfig) -> Result<IntervalConfig, IndexOutOfRange> {
    check_slot(i, a.len())?;
    let (lo, hi) = &a.intervals[i - 1];
    let map = AffineMap1::between(&Rational::zero(), &Rational::one(), lo, hi);
    let mut intervals = Vec::with_capacity(a.len() + b.len() - 1);
    intervals.extend_from_slice(&a.intervals[..i - 1]);
    intervals.extend(b.intervals.iter().map(|(l, r)| (map.apply(l), map.apply(r))));
    intervals.extend_from_slice(&a.intervals[i..]);
    Ok(IntervalConfig { intervals })
}

impl Operad for IntervalConfig {
    fn arity(&self) -> usize {
        self.len()
    }

    fn compose(&self, i: usize, other: &Self) -> Result<Self, IndexOutOfRange> {
        d1_compose(self, i, other)
    }
}

/// A tiling of `[0, 1]` by consecutive intervals of the given lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalTiling {
    lengths: Vec<Rational>,
}

impl IntervalTiling {
    pub fn new(lengths: Vec<Rational>) -> Result<Self, IntervalError> {
        if lengths.is_empty() {
            return Err(IntervalError::TooShort { min: 1 });
        }
        if let Some(k) = lengths.iter().position(|l| !l.is_positive()) {
            return Err(IntervalError::NonPositiveLength { index: k + 1 });
        }
        let sum: Rational = lengths.iter().sum();
        if !sum.is_one() {
            return Err(IntervalError::BadSum { sum });
        }
        Ok(IntervalTiling { lengths })
    }

    /// The tiling whose interior breakpoints are `breakpoints`.
    pub fn from_breakpoints(breakpoints: &[Rational]) -> Result<Self, IntervalError> {
        let mut lengths = Vec::with_capacity(breakpoints.len() + 1);
        let mut prev = Rational::zero();
        for b in breakpoints.iter().chain(std::iter::once(&Rational::one())) {
            lengths.push(b - &prev);
            prev = b.clone();
        }
        IntervalTiling::new(lengths)
    }

    /// The binary generator `[0, λ] ∪ [λ, 1]`.
    pub fn generator(lambda: &Rational) -> Result<Self, IntervalError> {
        IntervalTiling::new(vec![lambda.clone(), Rational::one() - lambda])
    }

    pub fn unit() -> Self {
        IntervalTiling {
            lengths: vec![Rational::one()],
        }
    }

    pub fn lengths(&self) -> &[Rational] {
        &self.lengths
    }

    /// Interior breakpoints, the partial sums `λ₁, λ₁+λ₂, …`.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut acc = Rational::zero();
        let mut out = Vec::with_capacity(self.lengths.len() - 1);
        for l in &self.lengths[..self.lengths.len() - 1] {
            acc += l;
            out.push(acc.clone());
        }
        out
    }

    /// All `n + 1` tile endpoints, from 0 to 1.
    pub fn to_points(&self) -> PointConfig {
        let mut points = Vec::with_capacity(self.lengths.len() + 1);
        points.push(Rational::zero());
        points.extend(self.breakpoints());
        points.push(Rational::one());
        PointConfig { points }
    }
}

pub fn tiling_compose(a: &IntervalTiling, i: usize, b: &IntervalTiling) -> Result<IntervalTiling, IndexOutOfRange> {
    check_slot(i, a.lengths.len())?;
    let slot = &a.lengths[i - 1];
    let mut lengths = Vec::with_capacity(a.lengths.len() + b.lengths.len() - 1);
    lengths.extend_from_slice(&a.lengths[..i - 1]);
    lengths.extend(b.lengths.iter().map(|mu| slot * mu));
    lengths.extend_from_slice(&a.lengths[i..]);
    Ok(IntervalTiling { lengths })
}

impl Operad for IntervalTiling {
    fn arity(&self) -> usize {
        self.lengths.len()
    }

    fn compose(&self, i: usize, other: &Self) -> Result<Self, IndexOutOfRange> {
        tiling_compose(self, i, other)
    }
}

/// Checks `P_{α+β} ∘₁ P_{α/(α+β)} = P_α ∘₂ P_{β/(1−α)}`.
pub fn check_barycentric(alpha: &Rational, beta: &Rational) -> Result<bool, IntervalError> {
    let sum = alpha + beta;
    if !alpha.is_positive() || !beta.is_positive() || sum >= Rational::one() {
        return Err(IntervalError::DomainError);
    }
    let lhs = tiling_compose(
        &IntervalTiling::generator(&sum)?,
        1,
        &IntervalTiling::generator(&(alpha / &sum))?,
    )
    .expect("slot 1 exists");
    let rhs = tiling_compose(
        &IntervalTiling::generator(alpha)?,
        2,
        &IntervalTiling::generator(&(beta / (Rational::one() - alpha)))?,
    )
    .expect("slot 2 exists");
    Ok(lhs == rhs)
}

/// `n + 1` strictly increasing points; an element of arity `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointConfig {
    points: Vec<Rational>,
}

impl PointConfig {
    pub fn new(points: Vec<Rational>) -> Result<Self, IntervalError> {
        if points.len() < 2 {
            return Err(IntervalError::TooShort { min: 2 });
        }
        if let Some(k) = (1..points.len()).find(|&k| points[k - 1] >= points[k]) {
            return Err(IntervalError::NotIncreasing { index: k + 1 });
        }
        Ok(PointConfig { points })
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn first(&self) -> &Rational {
        &self.points[0]
    }

    pub fn last(&self) -> &Rational {
        &self.points[self.points.len() - 1]
    }

    /// `x ↦ (last − first)·x + first`, sending `[0, 1]` onto the hull.
    pub fn frame(&self) -> AffineMap1 {
        AffineMap1 {
            scale: self.last() - self.first(),
            shift: self.first().clone(),
        }
    }

    pub fn act(&self, g: &AffineMap1) -> PointConfig {
        PointConfig {
            points: self.points.iter().map(|x| g.apply(x)).collect(),
        }
    }

    /// The tiling of `[0, 1]` obtained after normalizing by the frame.
    pub fn to_tiling(&self) -> IntervalTiling {
        let span = self.last() - self.first();
        IntervalTiling {
            lengths: self.points.windows(2).map(|w| (&w[1] - &w[0]) / &span).collect(),
        }
    }
}

pub fn chat_compose(a: &PointConfig, i: usize, b: &PointConfig) -> Result<PointConfig, IndexOutOfRange> {
    check_slot(i, a.points.len() - 1)?;
    let map = AffineMap1::between(b.first(), b.last(), &a.points[i - 1], &a.points[i]);
    let inner = &b.points[1..b.points.len() - 1];
    let mut points = Vec::with_capacity(a.points.len() + inner.len());
    points.extend_from_slice(&a.points[..i]);
    points.extend(inner.iter().map(|x| map.apply(x)));
    points.extend_from_slice(&a.points[i..]);
    Ok(PointConfig { points })
}

impl Operad for PointConfig {
    fn arity(&self) -> usize {
        self.points.len() - 1
    }

    fn compose(&self, i: usize, other: &Self) -> Result<Self, IndexOutOfRange> {
        chat_compose(self, i, other)
    }
}

/// A configuration as a word of affine maps, one per gap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWord1 {
    letters: Vec<AffineMap1>,
}

impl AffineWord1 {
    pub fn new(letters: Vec<AffineMap1>) -> Result<Self, IntervalError> {
        if letters.is_empty() {
            return Err(IntervalError::TooShort { min: 1 });
        }
        if let Some(k) = letters.iter().position(|l| !l.scale.is_positive()) {
            return Err(IntervalError::NonPositiveScale { index: k + 1 });
        }
        for k in 1..letters.len() {
            if &letters[k - 1].scale + &letters[k - 1].shift != letters[k].shift {
                return Err(IntervalError::MatchingViolation { index: k });
            }
        }
        Ok(AffineWord1 { letters })
    }

    pub fn letters(&self) -> &[AffineMap1] {
        &self.letters
    }

    /// `b₁ = 0` and `b_n + λ_n = 1`.
    pub fn is_normalized(&self) -> bool {
        let last = &self.letters[self.letters.len() - 1];
        self.letters[0].shift.is_zero() && (&last.scale + &last.shift).is_one()
    }
}

/// Letters `[[λₖ, bₖ], [0, 1]]` with `bₖ` the partial sums of the lengths.
pub fn encode_affine_word(t: &IntervalTiling) -> AffineWord1 {
    let mut shift = Rational::zero();
    let letters = t
        .lengths
        .iter()
        .map(|l| {
            let letter = AffineMap1 {
                scale: l.clone(),
                shift: shift.clone(),
            };
            shift += l;
            letter
        })
        .collect();
    AffineWord1 { letters }
}

/// The points `b₁, …, b_n, b_n + λ_n`.
pub fn decode_affine_word(w: &AffineWord1) -> PointConfig {
    let mut points: Vec<Rational> = w.letters.iter().map(|l| l.shift.clone()).collect();
    let last = &w.letters[w.letters.len() - 1];
    points.push(&last.shift + &last.scale);
    PointConfig { points }
}
