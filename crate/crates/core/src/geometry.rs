//! Exact planar affine geometry in the `qt`-plane.
//!
//! `q` is the horizontal (space) coordinate and `t` the vertical (time)
//! coordinate. Lines are stored as `a·q + b·t = c` in a canonical scaling,
//! so derived `PartialEq` is geometric equality. Affine maps store the top
//! two rows of a homogeneous 3×3 matrix whose last row is `0 0 1`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("points coincide; no unique line passes through them")]
    CoincidentPoints,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("degenerate line: both a and b are zero")]
    DegenerateLine,
    #[error("affine map is singular")]
    SingularMap,
    #[error("the {0} triple is collinear")]
    CollinearTriple(TripleRole),
}

/// Which argument of [`affine_from_triples`] was degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleRole {
    Source,
    Target,
}

impl fmt::Display for TripleRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TripleRole::Source => f.write_str("source"),
            TripleRole::Target => f.write_str("target"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub q: Rational,
    pub t: Rational,
}

impl Point2 {
    pub fn new(q: Rational, t: Rational) -> Self {
        Point2 { q, t }
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.q), format_rational(&self.t))
    }
}

/// The line `a·q + b·t = c`, scaled so that the first nonzero of `(a, b)` is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line2 {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl Line2 {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, GeometryError> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(GeometryError::DegenerateLine);
        };
        Ok(Line2 {
            a: a / &lead,
            b: b / &lead,
            c: c / &lead,
        })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// Residual `a·q + b·t − c`; zero exactly on the line.
    pub fn residual(&self, p: &Point2) -> Rational {
        &self.a * &p.q + &self.b * &p.t - &self.c
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.residual(p).is_zero()
    }

    pub fn is_parallel_to(&self, other: &Line2) -> bool {
        (&self.a * &other.b - &other.a * &self.b).is_zero()
    }
}

impl fmt::Display for Line2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}·q + {}·t = {}",
            format_rational(&self.a),
            format_rational(&self.b),
            format_rational(&self.c)
        )
    }
}

pub fn line_through(p1: &Point2, p2: &Point2) -> Result<Line2, GeometryError> {
    if p1 == p2 {
        return Err(GeometryError::CoincidentPoints);
    }
    // normal to the direction (dq, dt)
    let a = &p2.t - &p1.t;
    let b = &p1.q - &p2.q;
    let c = &a * &p1.q + &b * &p1.t;
    Line2::new(a, b, c)
}

pub fn intersect(l1: &Line2, l2: &Line2) -> Result<Point2, GeometryError> {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return Err(GeometryError::ParallelLines);
    }
    let q = (&l1.c * &l2.b - &l2.c * &l1.b) / &det;
    let t = (&l1.a * &l2.c - &l2.a * &l1.c) / &det;
    Ok(Point2 { q, t })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn signum(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    fn of(value: &Rational) -> Self {
        if value.is_zero() {
            Orientation::Collinear
        } else if value.is_positive() {
            Orientation::CounterClockwise
        } else {
            Orientation::Clockwise
        }
    }
}

/// Sign of `det(b − a, c − a)`.
pub fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Orientation {
    let det = (&b.q - &a.q) * (&c.t - &a.t) - (&b.t - &a.t) * (&c.q - &a.q);
    Orientation::of(&det)
}

/// `(q, t) ↦ (m11·q + m12·t + m13, m21·q + m22·t + m23)`, always invertible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineMap2 {
    m: [Rational; 6],
}

impl AffineMap2 {
    pub fn new(
        m11: Rational,
        m12: Rational,
        m13: Rational,
        m21: Rational,
        m22: Rational,
        m23: Rational,
    ) -> Result<Self, GeometryError> {
        let map = AffineMap2 {
            m: [m11, m12, m13, m21, m22, m23],
        };
        if map.determinant().is_zero() {
            return Err(GeometryError::SingularMap);
        }
        Ok(map)
    }

    pub fn identity() -> Self {
        let (z, o) = (Rational::zero(), Rational::one());
        AffineMap2 {
            m: [o.clone(), z.clone(), z.clone(), z.clone(), o, z],
        }
    }

    pub fn translation(dq: Rational, dt: Rational) -> Self {
        let (z, o) = (Rational::zero(), Rational::one());
        AffineMap2 {
            m: [o.clone(), z.clone(), dq, z, o, dt],
        }
    }

    /// Entries in row-major order `[m11, m12, m13, m21, m22, m23]`.
    pub fn entries(&self) -> &[Rational; 6] {
        &self.m
    }

    pub fn m11(&self) -> &Rational {
        &self.m[0]
    }
    pub fn m12(&self) -> &Rational {
        &self.m[1]
    }
    pub fn m13(&self) -> &Rational {
        &self.m[2]
    }
    pub fn m21(&self) -> &Rational {
        &self.m[3]
    }
    pub fn m22(&self) -> &Rational {
        &self.m[4]
    }
    pub fn m23(&self) -> &Rational {
        &self.m[5]
    }

    pub fn determinant(&self) -> Rational {
        &self.m[0] * &self.m[4] - &self.m[1] * &self.m[3]
    }

    /// Preserves the root line `t = 0` and the upper half-plane, and keeps
    /// the orientation of the root line: second row `(0, c, 0)` with `c > 0`,
    /// and `m11 > 0`.
    pub fn is_stabilizer(&self) -> bool {
        self.m21().is_zero() && self.m23().is_zero() && self.m22().is_positive() && self.m11().is_positive()
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        let m = &self.m;
        Point2 {
            q: &m[0] * &p.q + &m[1] * &p.t + &m[2],
            t: &m[3] * &p.q + &m[4] * &p.t + &m[5],
        }
    }

    /// Image of a line: the line `{ self.apply(x) : x ∈ l }`.
    pub fn apply_line(&self, l: &Line2) -> Line2 {
        // y = A x + v  ⇒  x = A⁻¹(y − v); a·x = c  ⇒  (aᵀA⁻¹)·y = c + (aᵀA⁻¹)·v
        let inv = self.inverse();
        let m = &inv.m;
        let a = &l.a * &m[0] + &l.b * &m[3];
        let b = &l.a * &m[1] + &l.b * &m[4];
        let c = &l.c + &a * &self.m[2] + &b * &self.m[5];
        Line2::new(a, b, c).expect("invertible maps send lines to lines")
    }

    pub fn inverse(&self) -> Self {
        let m = &self.m;
        let det = self.determinant();
        let i11 = &m[4] / &det;
        let i12 = -&m[1] / &det;
        let i21 = -&m[3] / &det;
        let i22 = &m[0] / &det;
        let i13 = -(&i11 * &m[2] + &i12 * &m[5]);
        let i23 = -(&i21 * &m[2] + &i22 * &m[5]);
        AffineMap2 {
            m: [i11, i12, i13, i21, i22, i23],
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineMap2) -> Self {
        compose_maps(self, other)
    }
}

/// `f ∘ g`, the map that applies `g` and then `f`.
pub fn compose_maps(f: &AffineMap2, g: &AffineMap2) -> AffineMap2 {
    let a = &f.m;
    let b = &g.m;
    AffineMap2 {
        m: [
            &a[0] * &b[0] + &a[1] * &b[3],
            &a[0] * &b[1] + &a[1] * &b[4],
            &a[0] * &b[2] + &a[1] * &b[5] + &a[2],
            &a[3] * &b[0] + &a[4] * &b[3],
            &a[3] * &b[1] + &a[4] * &b[4],
            &a[3] * &b[2] + &a[4] * &b[5] + &a[5],
        ],
    }
}

/// The unique affine map sending `src[k]` to `dst[k]` for `k = 0, 1, 2`.
pub fn affine_from_triples(src: [&Point2; 3], dst: [&Point2; 3]) -> Result<AffineMap2, GeometryError> {
    if orientation(src[0], src[1], src[2]) == Orientation::Collinear {
        return Err(GeometryError::CollinearTriple(TripleRole::Source));
    }
    if orientation(dst[0], dst[1], dst[2]) == Orientation::Collinear {
        return Err(GeometryError::CollinearTriple(TripleRole::Target));
    }
    // frame maps sending (0,0), (1,0), (0,1) to the triple
    let frame = |p: [&Point2; 3]| AffineMap2 {
        m: [
            &p[1].q - &p[0].q,
            &p[2].q - &p[0].q,
            p[0].q.clone(),
            &p[1].t - &p[0].t,
            &p[2].t - &p[0].t,
            p[0].t.clone(),
        ],
    };
    Ok(compose_maps(&frame(dst), &frame(src).inverse()))
}
