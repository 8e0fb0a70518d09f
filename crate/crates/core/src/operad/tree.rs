//! Planar rooted trees under grafting.
//!
//! Leaves are numbered `1..=n` in clockwise caterpillar order, which for a
//! planar tree drawn root-down is the left-to-right order of a depth-first
//! traversal. Grafting `b` onto leaf `i` of `a` replaces that leaf by the
//! whole of `b`.
//!
//! Trees print as bracket strings: a leaf is `()` and a vertex wraps its
//! children, so the 3-corolla is `(()()())`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{check_slot, IndexOutOfRange, Operad};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PlanarTree {
    Leaf,
    /// A vertex with an ordered, nonempty list of children.
    Node(Vec<PlanarTree>),
}

impl PlanarTree {
    /// One vertex carrying `n ≥ 1` leaves.
    pub fn corolla(n: usize) -> Self {
        assert!(n >= 1, "a corolla needs at least one leaf");
        PlanarTree::Node(vec![PlanarTree::Leaf; n])
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(children) => children.iter().map(PlanarTree::leaf_count).sum(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            PlanarTree::Leaf => 0,
            PlanarTree::Node(children) => 1 + children.iter().map(PlanarTree::vertex_count).sum::<usize>(),
        }
    }

    /// Replaces leaf `index` (0-based, caterpillar order) with `b`. Returns
    /// the number of leaves consumed when the target leaf is not in `self`.
    fn replace_leaf(&mut self, index: usize, b: &PlanarTree) -> Result<(), usize> {
        match self {
            PlanarTree::Leaf => {
                if index == 0 {
                    *self = b.clone();
                    Ok(())
                } else {
                    Err(1)
                }
            }
            PlanarTree::Node(children) => {
                let mut remaining = index;
                for child in children.iter_mut() {
                    match child.replace_leaf(remaining, b) {
                        Ok(()) => return Ok(()),
                        Err(used) => remaining -= used,
                    }
                }
                Err(index - remaining)
            }
        }
    }
}

/// Attaches the root of `b` onto leaf `i` of `a`.
pub fn graft(a: &PlanarTree, i: usize, b: &PlanarTree) -> Result<PlanarTree, IndexOutOfRange> {
    check_slot(i, a.leaf_count())?;
    let mut out = a.clone();
    out.replace_leaf(i - 1, b).expect("slot checked against the leaf count");
    Ok(out)
}

impl Operad for PlanarTree {
    fn arity(&self) -> usize {
        self.leaf_count()
    }

    fn compose(&self, i: usize, other: &Self) -> Result<Self, IndexOutOfRange> {
        graft(self, i, other)
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf => f.write_str("()"),
            PlanarTree::Node(children) => {
                f.write_str("(")?;
                for c in children {
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed tree string at byte {position}")]
pub struct TreeParseError {
    pub position: usize,
}

impl FromStr for PlanarTree {
    type Err = TreeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let (tree, end) = parse_at(&bytes, 0)?;
        if end != bytes.len() {
            return Err(TreeParseError { position: end });
        }
        Ok(tree)
    }
}

fn parse_at(bytes: &[u8], start: usize) -> Result<(PlanarTree, usize), TreeParseError> {
    if bytes.get(start) != Some(&b'(') {
        return Err(TreeParseError { position: start });
    }
    let mut pos = start + 1;
    let mut children = Vec::new();
    loop {
        match bytes.get(pos) {
            Some(b')') => {
                let tree = if children.is_empty() {
                    PlanarTree::Leaf
                } else {
                    PlanarTree::Node(children)
                };
                return Ok((tree, pos + 1));
            }
            Some(b'(') => {
                let (child, next) = parse_at(bytes, pos)?;
                children.push(child);
                pos = next;
            }
            _ => return Err(TreeParseError { position: pos }),
        }
    }
}
