//! Checkers for the sequential and parallel associativity laws and for
//! operad morphisms, plus a seeded sampling harness.
//!
//! Sequential: `(a ∘ᵢ b) ∘ⱼ c = a ∘ᵢ (b ∘_{j−i+1} c)` for
//! `i ≤ j ≤ i + arity(b) − 1`.
//!
//! Parallel: `(a ∘ᵢ b) ∘_{j+arity(b)−1} c = (a ∘ⱼ c) ∘ᵢ b` for `i < j`.

use std::fmt::{self, Debug};

use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use super::{IndexOutOfRange, Operad};
use crate::sample::{seeded_rng, SampleRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Sequential,
    Parallel,
    Morphism,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::Sequential => "sequential",
            Law::Parallel => "parallel",
            Law::Morphism => "morphism",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("law indices violate preconditions: i = {i}, j = {j}")]
    InvalidIndices { i: usize, j: usize },
    #[error(transparent)]
    IndexOutOfRange(#[from] IndexOutOfRange),
}

/// Result of comparing the two sides of one law instance.
#[derive(Debug, Clone, PartialEq)]
pub enum LawCheck<T> {
    Holds,
    Fails { lhs: T, rhs: T },
}

impl<T> LawCheck<T> {
    pub fn holds(&self) -> bool {
        matches!(self, LawCheck::Holds)
    }

    fn compare(lhs: T, rhs: T) -> Self
    where
        T: PartialEq,
    {
        if lhs == rhs {
            LawCheck::Holds
        } else {
            LawCheck::Fails { lhs, rhs }
        }
    }
}

pub fn check_sequential<O: Operad>(a: &O, b: &O, c: &O, i: usize, j: usize) -> Result<LawCheck<O>, LawError> {
    if i == 0 || i > a.arity() || j < i || j > i + b.arity() - 1 {
        return Err(LawError::InvalidIndices { i, j });
    }
    let lhs = a.compose(i, b)?.compose(j, c)?;
    let rhs = a.compose(i, &b.compose(j - i + 1, c)?)?;
    Ok(LawCheck::compare(lhs, rhs))
}

pub fn check_parallel<O: Operad>(a: &O, b: &O, c: &O, i: usize, j: usize) -> Result<LawCheck<O>, LawError> {
    if i == 0 || i >= j || j > a.arity() {
        return Err(LawError::InvalidIndices { i, j });
    }
    let lhs = a.compose(i, b)?.compose(j + b.arity() - 1, c)?;
    let rhs = a.compose(j, c)?.compose(i, b)?;
    Ok(LawCheck::compare(lhs, rhs))
}

/// Compares `f(a ∘ᵢ b)` with `f(a) ∘ᵢ f(b)`.
pub fn check_morphism<O, T, F>(f: F, a: &O, i: usize, b: &O) -> Result<LawCheck<T>, LawError>
where
    O: Operad,
    T: Operad,
    F: Fn(&O) -> T,
{
    let lhs = f(&a.compose(i, b)?);
    let rhs = f(a).compose(i, &f(b))?;
    Ok(LawCheck::compare(lhs, rhs))
}

/// Produces random valid elements of one operad.
pub trait Sampler<O>: Sync {
    fn sample(&self, rng: &mut SampleRng) -> O;
}

impl<O, F> Sampler<O> for F
where
    F: Fn(&mut SampleRng) -> O + Sync,
{
    fn sample(&self, rng: &mut SampleRng) -> O {
        self(rng)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawFailure {
    pub sample: u64,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: Law,
    pub samples_tested: usize,
    pub failures: Vec<LawFailure>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawSuiteReport {
    pub sequential: LawReport,
    pub parallel: LawReport,
}

impl LawSuiteReport {
    pub fn passed(&self) -> bool {
        self.sequential.passed() && self.parallel.passed()
    }
}

fn sample_with_arity<O: Operad, S: Sampler<O>>(sampler: &S, rng: &mut SampleRng, min_arity: usize) -> O {
    loop {
        let x = sampler.sample(rng);
        if x.arity() >= min_arity {
            return x;
        }
    }
}

fn failure<O: Debug>(sample: u64, (a, b, c): (&O, &O, &O), (i, j): (usize, usize), lhs: &O, rhs: &O) -> LawFailure {
    LawFailure {
        sample,
        inputs: format!("a = {a:?}, b = {b:?}, c = {c:?}, i = {i}, j = {j}"),
        lhs: format!("{lhs:?}"),
        rhs: format!("{rhs:?}"),
    }
}

fn run_one<O, S>(sampler: &S, law: Law, samples: usize, seed: u64) -> LawReport
where
    O: Operad + Send,
    S: Sampler<O>,
{
    let salt: u64 = match law {
        Law::Sequential => 0,
        Law::Parallel => 1 << 32,
        Law::Morphism => 2 << 32,
    };
    let failures: Vec<LawFailure> = (0..samples as u64)
        .into_par_iter()
        .filter_map(|k| {
            let mut rng = seeded_rng(seed, salt + k);
            match law {
                Law::Parallel => {
                    let a = sample_with_arity(sampler, &mut rng, 2);
                    let b = sampler.sample(&mut rng);
                    let c = sampler.sample(&mut rng);
                    let i = rng.gen_range(1..a.arity());
                    let j = rng.gen_range(i + 1..=a.arity());
                    match check_parallel(&a, &b, &c, i, j).expect("indices drawn in range") {
                        LawCheck::Holds => None,
                        LawCheck::Fails { lhs, rhs } => Some(failure(k, (&a, &b, &c), (i, j), &lhs, &rhs)),
                    }
                }
                _ => {
                    let a = sampler.sample(&mut rng);
                    let b = sampler.sample(&mut rng);
                    let c = sampler.sample(&mut rng);
                    let i = rng.gen_range(1..=a.arity());
                    let j = rng.gen_range(i..=i + b.arity() - 1);
                    match check_sequential(&a, &b, &c, i, j).expect("indices drawn in range") {
                        LawCheck::Holds => None,
                        LawCheck::Fails { lhs, rhs } => Some(failure(k, (&a, &b, &c), (i, j), &lhs, &rhs)),
                    }
                }
            }
        })
        .collect();
    LawReport {
        law,
        samples_tested: samples,
        failures,
    }
}

/// Checks both associativity laws on `samples` seeded random triples each.
pub fn run_law_suite<O, S>(sampler: &S, samples: usize, seed: u64) -> LawSuiteReport
where
    O: Operad + Send,
    S: Sampler<O>,
{
    LawSuiteReport {
        sequential: run_one(sampler, Law::Sequential, samples, seed),
        parallel: run_one(sampler, Law::Parallel, samples, seed),
    }
}

/// Checks `f(a ∘ᵢ b) = f(a) ∘ᵢ f(b)` on `samples` seeded random pairs.
pub fn run_morphism_suite<O, T, S, F>(sampler: &S, f: F, samples: usize, seed: u64) -> LawReport
where
    O: Operad + Send,
    T: Operad,
    S: Sampler<O>,
    F: Fn(&O) -> T + Sync,
{
    let failures: Vec<LawFailure> = (0..samples as u64)
        .into_par_iter()
        .filter_map(|k| {
            let mut rng = seeded_rng(seed, (2 << 32) + k);
            let a = sampler.sample(&mut rng);
            let b = sampler.sample(&mut rng);
            let i = rng.gen_range(1..=a.arity());
            match check_morphism(&f, &a, i, &b).expect("index drawn in range") {
                LawCheck::Holds => None,
                LawCheck::Fails { lhs, rhs } => Some(LawFailure {
                    sample: k,
                    inputs: format!("a = {a:?}, b = {b:?}, i = {i}"),
                    lhs: format!("{lhs:?}"),
                    rhs: format!("{rhs:?}"),
                }),
            }
        })
        .collect();
    LawReport {
        law: Law::Morphism,
        samples_tested: samples,
        failures,
    }
}
