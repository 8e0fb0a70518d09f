//! The chain of faces of the permutahedron traced by an arrangement.
//!
//! Just above the root the lines appear left to right as `1, …, n`. Each
//! crossing time is an event: lines meeting at one point form a block, the
//! blocks are ordered left to right, and every block is reversed. After the
//! last event the order is `n, …, 1`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Arrangement;
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionEvent {
    #[serde(with = "crate::rational::serde_str")]
    pub time: Rational,
    /// Ordered partition of all lines, singletons included; the lines of a
    /// block are listed in their order just before the event.
    pub blocks: Vec<Vec<usize>>,
}

impl PartitionEvent {
    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.blocks.iter().filter(|b| b.len() > 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedPartitionChain {
    pub events: Vec<PartitionEvent>,
    /// `states[k]` is the left-to-right order before `events[k]`.
    pub states: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("lines {lines:?} meet in one point at time {}", format_rational(.time))]
    NotGeneric { time: Rational, lines: Vec<usize> },
}

pub fn permutahedron_chain(p: &Arrangement) -> OrderedPartitionChain {
    let r = p.rank();
    let times: BTreeSet<Rational> = (1..=r)
        .flat_map(|i| (i + 1..=r).map(move |j| (i, j)))
        .map(|(i, j)| p.crossing_time(i, j))
        .collect();
    let mut state: Vec<usize> = (1..=r).collect();
    let mut states = vec![state.clone()];
    let mut events = Vec::with_capacity(times.len());
    for time in times {
        // lines sharing a position at `time` are consecutive in `state`
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut prev: Option<Rational> = None;
        for &k in &state {
            let q = p.line(k).q_at(&time);
            match (&prev, blocks.last_mut()) {
                (Some(pq), Some(block)) if *pq == q => block.push(k),
                _ => blocks.push(vec![k]),
            }
            prev = Some(q);
        }
        state = blocks.iter().flat_map(|b| b.iter().rev().copied()).collect();
        states.push(state.clone());
        events.push(PartitionEvent { time, blocks });
    }
    OrderedPartitionChain { events, states }
}

/// Positions `s_k` (swap of places `k`, `k + 1`) sorting `1, …, n` into
/// `n, …, 1` along the arrangement. Simultaneous disjoint crossings are
/// listed left to right.
///
/// ```
/// use arrangeops::arrangement::{reduced_word, validate};
/// use arrangeops::rational::int;
///
/// let p = validate(vec![(int(0), int(3)), (int(1), int(1)), (int(2), int(0))]).unwrap();
/// assert_eq!(reduced_word(&p).unwrap(), vec![1, 2, 1]);
/// ```
pub fn reduced_word(p: &Arrangement) -> Result<Vec<usize>, WordError> {
    let chain = permutahedron_chain(p);
    let mut word = Vec::new();
    for (event, state) in chain.events.iter().zip(&chain.states) {
        let mut position = 0;
        for block in &event.blocks {
            match block.len() {
                1 => {}
                2 => word.push(position + 1),
                _ => {
                    return Err(WordError::NotGeneric {
                        time: event.time.clone(),
                        lines: block.clone(),
                    })
                }
            }
            debug_assert_eq!(state[position], block[0]);
            position += block.len();
        }
    }
    Ok(word)
}

/// Applies adjacent transpositions `s_k` to the identity of size `n`.
pub fn apply_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=n).collect();
    for &k in word {
        perm.swap(k - 1, k);
    }
    perm
}
