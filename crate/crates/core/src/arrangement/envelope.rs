//! The upper envelope: the outer boundary of the bounded part of the
//! arrangement, walked from `P₁` to `P_last`.
//!
//! The walk starts up line 1. At every vertex it takes the left-most
//! available direction along a line through that vertex, never reversing,
//! and never following a line upward past its last vertex. Straight-through
//! vertices are dropped.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::Arrangement;
use crate::geometry::Point2;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Direction {
    line: usize,
    up: bool,
}

fn vector(p: &Arrangement, d: &Direction) -> (Rational, Rational) {
    let m = p.line(d.line).p.clone();
    if d.up {
        (m, Rational::from_integer(1.into()))
    } else {
        (-m, Rational::from_integer((-1).into()))
    }
}

fn cross(u: &(Rational, Rational), v: &(Rational, Rational)) -> Rational {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// Orders candidate turns from `d`: left turns first, then straight, then
/// right turns; within a class the more counter-clockwise wins.
fn better(d: &(Rational, Rational), u: &(Rational, Rational), v: &(Rational, Rational)) -> bool {
    let class = |w: &(Rational, Rational)| {
        let c = cross(d, w);
        if c.is_positive() {
            2
        } else if c.is_zero() {
            1
        } else {
            0
        }
    };
    let (cu, cv) = (class(u), class(v));
    if cu != cv {
        return cu > cv;
    }
    cross(v, u).is_positive()
}

pub fn upper_envelope(p: &Arrangement) -> Vec<Point2> {
    let r = p.rank();
    // vertices on each line, ascending in time
    let on_line: Vec<Vec<Point2>> = (1..=r)
        .map(|k| {
            let set: BTreeSet<(Rational, Point2)> = (1..=r)
                .filter(|&j| j != k)
                .map(|j| {
                    let x = p.crossing(k, j);
                    (x.t.clone(), x)
                })
                .collect();
            set.into_iter().map(|(_, x)| x).collect()
        })
        .collect();
    let lines_through = |x: &Point2| -> Vec<usize> { (1..=r).filter(|&k| p.line(k).to_line2().contains(x)).collect() };

    let mut chain = vec![p.root_point(1)];
    let mut heading = Direction { line: 1, up: true };
    let mut at = on_line[0][0].clone();
    let bound = 4 * r * r + 8;
    for _ in 0..bound {
        chain.push(at.clone());
        let incoming = vector(p, &heading);
        let mut best: Option<(Direction, (Rational, Rational))> = None;
        for k in lines_through(&at) {
            for up in [true, false] {
                if k == heading.line && up != heading.up {
                    continue;
                }
                if up && on_line[k - 1].last().is_none_or(|v| v.t <= at.t) {
                    continue;
                }
                let cand = Direction { line: k, up };
                let v = vector(p, &cand);
                if best.as_ref().is_none_or(|(_, bv)| better(&incoming, &v, bv)) {
                    best = Some((cand, v));
                }
            }
        }
        let (next, _) = best.expect("a downward ray always exists");
        let line = &on_line[next.line - 1];
        let target = if next.up {
            line.iter().find(|v| v.t > at.t).cloned()
        } else {
            line.iter().rev().find(|v| v.t < at.t).cloned()
        };
        heading = next;
        match target {
            Some(v) => at = v,
            None => {
                chain.push(p.root_point(heading.line));
                return merge_collinear(chain);
            }
        }
    }
    panic!("envelope walk exceeded {bound} steps");
}

fn merge_collinear(chain: Vec<Point2>) -> Vec<Point2> {
    let mut out: Vec<Point2> = Vec::with_capacity(chain.len());
    for x in chain {
        if out.last() == Some(&x) {
            continue;
        }
        if out.len() >= 2 {
            let a = &out[out.len() - 2];
            let b = &out[out.len() - 1];
            let ab = (&b.q - &a.q, &b.t - &a.t);
            let bx = (&x.q - &b.q, &x.t - &b.t);
            if cross(&ab, &bx).is_zero() {
                out.pop();
            }
        }
        out.push(x);
    }
    out
}
