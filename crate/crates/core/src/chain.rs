//! Monotone polygonal chains in the `(q, s)` plane, `s = −p`.
//!
//! Composition replaces segment `i` of `a` by an axis-aligned rescaled copy
//! of `b`. Projection to each coordinate is an isomorphism onto the product
//! of two copies of the point-configuration operad.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::{chat_compose, PointConfig};
use crate::operad::{check_slot, IndexOutOfRange, Operad};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("a chain needs at least two vertices")]
    TooShort,
    #[error("coordinates are not strictly increasing at vertex {index}")]
    NotMonotone { index: usize },
    #[error("configurations have {left} and {right} points")]
    LengthMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(String, String)>", into = "Vec<(String, String)>")]
pub struct PolygonalChain {
    vertices: Vec<(Rational, Rational)>,
}

impl PolygonalChain {
    pub fn new(vertices: Vec<(Rational, Rational)>) -> Result<Self, ChainError> {
        if vertices.len() < 2 {
            return Err(ChainError::TooShort);
        }
        for k in 1..vertices.len() {
            let (q0, s0) = &vertices[k - 1];
            let (q1, s1) = &vertices[k];
            if q0 >= q1 || s0 >= s1 {
                return Err(ChainError::NotMonotone { index: k + 1 });
            }
        }
        Ok(PolygonalChain { vertices })
    }

    pub fn vertices(&self) -> &[(Rational, Rational)] {
        &self.vertices
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len() - 1
    }
}

impl TryFrom<Vec<(String, String)>> for PolygonalChain {
    type Error = String;

    fn try_from(raw: Vec<(String, String)>) -> Result<Self, Self::Error> {
        let parse = |s: &str| crate::rational::parse_rational(s).map_err(|e| e.to_string());
        let vertices = raw
            .iter()
            .map(|(q, s)| Ok((parse(q)?, parse(s)?)))
            .collect::<Result<Vec<_>, String>>()?;
        PolygonalChain::new(vertices).map_err(|e| e.to_string())
    }
}

impl From<PolygonalChain> for Vec<(String, String)> {
    fn from(c: PolygonalChain) -> Self {
        use crate::rational::format_rational as f;
        c.vertices.iter().map(|(q, s)| (f(q), f(s))).collect()
    }
}

/// Rescales `x` from `[lo, hi]` onto `[to_lo, to_hi]`.
fn rescale(x: &Rational, lo: &Rational, hi: &Rational, to_lo: &Rational, to_hi: &Rational) -> Rational {
    to_lo + (x - lo) * (to_hi - to_lo) / (hi - lo)
}

pub fn chain_compose(a: &PolygonalChain, i: usize, b: &PolygonalChain) -> Result<PolygonalChain, IndexOutOfRange> {
    check_slot(i, a.segment_count())?;
    let (pq, ps) = &a.vertices[i - 1];
    let (nq, ns) = &a.vertices[i];
    let (bq0, bs0) = &b.vertices[0];
    let (bq1, bs1) = &b.vertices[b.vertices.len() - 1];
    let inner = &b.vertices[1..b.vertices.len() - 1];
    let mut vertices = Vec::with_capacity(a.vertices.len() + inner.len());
    vertices.extend_from_slice(&a.vertices[..i]);
    vertices.extend(
        inner
            .iter()
            .map(|(q, s)| (rescale(q, bq0, bq1, pq, nq), rescale(s, bs0, bs1, ps, ns))),
    );
    vertices.extend_from_slice(&a.vertices[i..]);
    Ok(PolygonalChain { vertices })
}

impl Operad for PolygonalChain {
    fn arity(&self) -> usize {
        self.segment_count()
    }

    fn compose(&self, i: usize, other: &Self) -> Result<Self, IndexOutOfRange> {
        chain_compose(self, i, other)
    }
}

/// The `q`- and `s`-projections.
pub fn chain_to_product(a: &PolygonalChain) -> (PointConfig, PointConfig) {
    let (qs, ss): (Vec<_>, Vec<_>) = a.vertices.iter().cloned().unzip();
    (
        PointConfig::new(qs).expect("chain invariant"),
        PointConfig::new(ss).expect("chain invariant"),
    )
}

pub fn product_to_chain(qc: &PointConfig, sc: &PointConfig) -> Result<PolygonalChain, ChainError> {
    if qc.points().len() != sc.points().len() {
        return Err(ChainError::LengthMismatch {
            left: qc.points().len(),
            right: sc.points().len(),
        });
    }
    let vertices = qc.points().iter().cloned().zip(sc.points().iter().cloned()).collect();
    Ok(PolygonalChain { vertices })
}

/// Componentwise composition in the product operad.
pub fn product_compose(
    a: &(PointConfig, PointConfig),
    i: usize,
    b: &(PointConfig, PointConfig),
) -> Result<(PointConfig, PointConfig), IndexOutOfRange> {
    Ok((chat_compose(&a.0, i, &b.0)?, chat_compose(&a.1, i, &b.1)?))
}

/// The chain `(qₖ, −pₖ)` of root crossings against negated momenta.
pub fn from_momenta(lines: &[(Rational, Rational)]) -> Result<PolygonalChain, ChainError> {
    PolygonalChain::new(lines.iter().map(|(q, p)| (q.clone(), Rational::zero() - p)).collect())
}
