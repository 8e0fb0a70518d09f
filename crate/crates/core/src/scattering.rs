//! Matrix-valued scattering amplitudes of line arrangements.
//!
//! Line `k` is particle `k` and owns tensor factor `k` of `(ℂᵈ)^{⊗n}`. A
//! crossing of lines `i < j` contributes `S_{ij}(pᵢ − pⱼ)`, the two-body
//! operator acting on factors `i` and `j` with `i` as its first factor.
//! Crossings act in chronological order, so the earliest crossing is the
//! rightmost factor of the product. Basis vectors are big-endian: factor 1
//! is the most significant digit, and the two-body index `(a, b)` is
//! `a·d + b`.

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::arrangement::{permutahedron_chain, z_project, Arrangement, ArrangementError};
use crate::geometry::Point2;
use crate::rational::{format_rational, to_f64, Rational};
use crate::sample::seeded_rng;

pub type Operator = DMatrix<Complex64>;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScatteringError {
    #[error("unknown theory `{0}`; expected identity, flip, broken, skew, yang or yang:eta=<float>")]
    UnknownTheory(String),
    #[error("spectral parameters must be pairwise distinct")]
    DegenerateParameters,
    #[error(
        "lines {lines:?} meet at time {} but the theory fails Yang-Baxter there (residual {residual:e})",
        format_rational(.time)
    )]
    NonFactorizable {
        time: Rational,
        lines: Vec<usize>,
        residual: f64,
    },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

type Evaluator = Arc<dyn Fn(f64) -> Operator + Send + Sync>;

/// A two-body scattering matrix `S(u)` on `ℂᵈ ⊗ ℂᵈ`.
#[derive(Clone)]
pub struct RMatrixTheory {
    pub name: String,
    pub dim: usize,
    pub tolerance: f64,
    evaluator: Evaluator,
}

impl fmt::Debug for RMatrixTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RMatrixTheory")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("tolerance", &self.tolerance)
            .finish_non_exhaustive()
    }
}

fn flip_matrix(d: usize) -> Operator {
    let mut m = Operator::zeros(d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            m[(b * d + a, a * d + b)] = Complex64::new(1.0, 0.0);
        }
    }
    m
}

impl RMatrixTheory {
    pub fn new<F>(name: impl Into<String>, dim: usize, evaluator: F) -> Self
    where
        F: Fn(f64) -> Operator + Send + Sync + 'static,
    {
        RMatrixTheory {
            name: name.into(),
            dim,
            tolerance: DEFAULT_TOLERANCE,
            evaluator: Arc::new(evaluator),
        }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn s(&self, u: f64) -> Operator {
        (self.evaluator)(u)
    }

    pub fn identity(dim: usize) -> Self {
        RMatrixTheory::new("identity", dim, move |_| Operator::identity(dim * dim, dim * dim))
    }

    pub fn flip(dim: usize) -> Self {
        let f = flip_matrix(dim);
        RMatrixTheory::new("flip", dim, move |_| f.clone())
    }

    /// `S(u) = (u·Id + η·P)/(u + η)` on `ℂ² ⊗ ℂ²`.
    pub fn yang(eta: f64) -> Self {
        let p = flip_matrix(2);
        RMatrixTheory::new(format!("yang:eta={eta}"), 2, move |u| {
            (Operator::identity(4, 4) * Complex64::new(u, 0.0) + &p * Complex64::new(eta, 0.0))
                / Complex64::new(u + eta, 0.0)
        })
    }

    /// `S(u) = Id + u·E₁₁ ⊗ E₂₂`.
    pub fn broken() -> Self {
        RMatrixTheory::new("broken", 2, |u| {
            let mut m = Operator::identity(4, 4);
            m[(1, 1)] += Complex64::new(u, 0.0);
            m
        })
    }

    /// `S(u) = Id + u·E₁₂ ⊗ E₂₁`; fails Yang-Baxter.
    pub fn skew() -> Self {
        RMatrixTheory::new("skew", 2, |u| {
            let mut m = Operator::identity(4, 4);
            m[(1, 2)] = Complex64::new(u, 0.0);
            m
        })
    }

    pub fn from_name(name: &str) -> Result<Self, ScatteringError> {
        match name {
            "identity" => Ok(RMatrixTheory::identity(2)),
            "flip" => Ok(RMatrixTheory::flip(2)),
            "broken" => Ok(RMatrixTheory::broken()),
            "skew" => Ok(RMatrixTheory::skew()),
            "yang" => Ok(RMatrixTheory::yang(1.0)),
            _ => name
                .strip_prefix("yang:eta=")
                .and_then(|eta| eta.parse::<f64>().ok())
                .filter(|eta| eta.is_finite())
                .map(RMatrixTheory::yang)
                .ok_or_else(|| ScatteringError::UnknownTheory(name.to_string())),
        }
    }
}

/// `s` acting on factors `k < l` (1-based) of an `n`-fold tensor power.
pub fn embed(s: &Operator, d: usize, n: usize, k: usize, l: usize) -> Operator {
    assert!(1 <= k && k < l && l <= n, "factors must satisfy 1 ≤ k < l ≤ n");
    let size = d.pow(n as u32);
    let wk = d.pow((n - k) as u32);
    let wl = d.pow((n - l) as u32);
    let mut out = Operator::zeros(size, size);
    for row in 0..size {
        let a = (row / wk) % d;
        let b = (row / wl) % d;
        let rest = row - a * wk - b * wl;
        for c in 0..d {
            for e in 0..d {
                let entry = s[(a * d + b, c * d + e)];
                if entry != Complex64::new(0.0, 0.0) {
                    out[(row, rest + c * wk + e * wl)] = entry;
                }
            }
        }
    }
    out
}

pub fn max_abs_diff(a: &Operator, b: &Operator) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max-entry norm of `S₁₂S₁₃S₂₃ − S₂₃S₁₃S₁₂` at `(u₁−u₂, u₁−u₃, u₂−u₃)`.
pub fn check_yang_baxter(th: &RMatrixTheory, u1: f64, u2: f64, u3: f64) -> Result<f64, ScatteringError> {
    if u1 == u2 || u1 == u3 || u2 == u3 {
        return Err(ScatteringError::DegenerateParameters);
    }
    let d = th.dim;
    let s12 = embed(&th.s(u1 - u2), d, 3, 1, 2);
    let s13 = embed(&th.s(u1 - u3), d, 3, 1, 3);
    let s23 = embed(&th.s(u2 - u3), d, 3, 2, 3);
    let lhs = &s12 * &s13 * &s23;
    let rhs = &s23 * &s13 * &s12;
    Ok(max_abs_diff(&lhs, &rhs))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScatteringAmplitude {
    pub operator: Operator,
    pub particle_count: usize,
}

/// Product of `S_{ij}(pᵢ − pⱼ)` over `pairs` in chronological order.
pub fn evaluate_pairs(th: &RMatrixTheory, momenta: &[f64], pairs: &[(usize, usize)]) -> Operator {
    let n = momenta.len();
    let size = th.dim.pow(n as u32);
    pairs.iter().fold(Operator::identity(size, size), |acc, &(i, j)| {
        embed(&th.s(momenta[i - 1] - momenta[j - 1]), th.dim, n, i, j) * acc
    })
}

fn lex_pairs(block: &[usize]) -> Vec<(usize, usize)> {
    let mut lines = block.to_vec();
    lines.sort_unstable();
    let mut out = Vec::new();
    for (x, &i) in lines.iter().enumerate() {
        for &j in &lines[x + 1..] {
            out.push((i, j));
        }
    }
    out
}

/// `(k−1,k), (k−2,k), …, (1,k), (k−2,k−1), …` for the sorted block.
fn colex_pairs(block: &[usize]) -> Vec<(usize, usize)> {
    let mut lines = block.to_vec();
    lines.sort_unstable();
    let mut out = Vec::new();
    for y in (1..lines.len()).rev() {
        for x in (0..y).rev() {
            out.push((lines[x], lines[y]));
        }
    }
    out
}

fn momenta(p: &Arrangement) -> Vec<f64> {
    p.lines().iter().map(|l| to_f64(&l.p)).collect()
}

/// The crossings of `p` in chronological order. A block of three or more
/// concurrent lines is expanded in lexicographic pair order once every
/// triple in it passes the Yang-Baxter check.
pub fn crossing_sequence(th: &RMatrixTheory, p: &Arrangement) -> Result<Vec<(usize, usize)>, ScatteringError> {
    let ps = momenta(p);
    let mut pairs = Vec::new();
    for event in permutahedron_chain(p).events {
        for block in event.nontrivial_blocks() {
            if block.len() >= 3 {
                let worst = lex_pairs(block)
                    .iter()
                    .flat_map(|&(i, j)| block.iter().filter(move |&&k| k > j).map(move |&k| (i, j, k)))
                    .map(|(i, j, k)| check_yang_baxter(th, ps[i - 1], ps[j - 1], ps[k - 1]))
                    .try_fold(0.0f64, |m, r| r.map(|r| m.max(r)))?;
                if worst > th.tolerance {
                    return Err(ScatteringError::NonFactorizable {
                        time: event.time.clone(),
                        lines: block.clone(),
                        residual: worst,
                    });
                }
            }
            pairs.extend(lex_pairs(block));
        }
    }
    Ok(pairs)
}

pub fn evaluate(th: &RMatrixTheory, p: &Arrangement) -> Result<ScatteringAmplitude, ScatteringError> {
    let pairs = crossing_sequence(th, p)?;
    Ok(ScatteringAmplitude {
        operator: evaluate_pairs(th, &momenta(p), &pairs),
        particle_count: p.rank(),
    })
}

/// Largest deviation between the amplitude of `p` and the amplitude of its
/// projection through `a`, with the single concurrent event expanded in the
/// lexicographic and the colexicographic order.
pub fn check_factorization(th: &RMatrixTheory, p: &Arrangement, a: &Point2) -> Result<f64, ScatteringError> {
    let z = z_project(p, a)?;
    let amplitude = evaluate(th, p)?.operator;
    let ps = momenta(&z);
    let all: Vec<usize> = (1..=z.rank()).collect();
    let lex = evaluate_pairs(th, &ps, &lex_pairs(&all));
    let colex = evaluate_pairs(th, &ps, &colex_pairs(&all));
    Ok(max_abs_diff(&amplitude, &lex).max(max_abs_diff(&amplitude, &colex)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct YangBaxterReport {
    pub theory: String,
    pub samples: usize,
    pub max_residual: f64,
    /// `(u₁, u₂, u₃, residual)` above tolerance.
    pub failures: Vec<(f64, f64, f64, f64)>,
}

impl YangBaxterReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks Yang-Baxter on `samples` seeded triples `u₁ > u₂ > u₃` in `[0, 5)`.
pub fn run_yang_baxter_suite(th: &RMatrixTheory, samples: usize, seed: u64, tolerance: f64) -> YangBaxterReport {
    let results: Vec<(f64, f64, f64, f64)> = (0..samples as u64)
        .into_par_iter()
        .map(|k| {
            let mut rng = seeded_rng(seed, (3 << 32) + k);
            loop {
                let mut u = [
                    rng.gen_range(0.0..5.0),
                    rng.gen_range(0.0..5.0),
                    rng.gen_range(0.0..5.0),
                ];
                u.sort_by(|a: &f64, b| b.total_cmp(a));
                if let Ok(r) = check_yang_baxter(th, u[0], u[1], u[2]) {
                    return (u[0], u[1], u[2], r);
                }
            }
        })
        .collect();
    YangBaxterReport {
        theory: th.name.clone(),
        samples,
        max_residual: results.iter().map(|r| r.3).fold(0.0, f64::max),
        failures: results.into_iter().filter(|r| r.3 >= tolerance).collect(),
    }
}
