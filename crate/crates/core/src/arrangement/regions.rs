//! Bounded faces cut out by the non-root lines.

use std::collections::BTreeSet;

use super::Arrangement;
use crate::geometry::Point2;

/// Bounded faces of the subdivision of the plane by the lines of `p`,
/// from the Euler relation `F = E − V + 1` on the intersection graph.
///
/// ```
/// use arrangeops::arrangement::{count_bounded_regions, validate};
/// use arrangeops::rational::int;
///
/// let generic = validate(vec![(int(0), int(9)), (int(1), int(5)), (int(3), int(2)), (int(4), int(0))]).unwrap();
/// assert_eq!(count_bounded_regions(&generic), 3);
/// ```
pub fn count_bounded_regions(p: &Arrangement) -> usize {
    let r = p.rank();
    let mut vertices = BTreeSet::new();
    let mut edges = 0usize;
    for k in 1..=r {
        let on_line: BTreeSet<Point2> = (1..=r).filter(|&j| j != k).map(|j| p.crossing(k, j)).collect();
        edges += on_line.len() - 1;
        vertices.extend(on_line);
    }
    if edges == 0 {
        return 0;
    }
    edges + 1 - vertices.len()
}
