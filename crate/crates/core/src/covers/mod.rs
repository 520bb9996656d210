//! r-covers of a finite set.
//!
//! A family of sets is an r-cover of `W` when every r-subset of `W` lies in
//! some member. Members may stick out of `W`; coverage only depends on their
//! traces `A ∩ W`.

mod bound;
mod enumerate;
mod phi;

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypercore::{intersection, Vertex, VertexSet};

pub use bound::{expected_cover_bound, BoundTerm, CoverBoundJson, CoverBoundReport};
pub use enumerate::enumerate_minimal_nontrivial_covers;
pub use phi::{check_cover_inequality, cover_inequality_lhs, phi, reduction_sequence};

/// A target set `W` together with a family of member sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoverFamily {
    pub w: VertexSet,
    pub r: usize,
    pub members: Vec<VertexSet>,
}

impl CoverFamily {
    /// Sorts `w` and each member, and orders members lexicographically.
    /// Repeated members are rejected.
    pub fn new(w: VertexSet, r: usize, members: Vec<VertexSet>) -> Result<Self> {
        let w = canonical(w)?;
        let mut members = members
            .into_iter()
            .map(canonical)
            .collect::<Result<Vec<_>>>()?;
        members.sort();
        if let Some(pair) = members.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::param(format!("member {:?} listed twice", pair[0])));
        }
        Ok(Self { w, r, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_cover(&self) -> Result<bool> {
        is_r_cover(&self.w, &self.members, self.r)
    }

    /// A cover is minimal when every member covers some r-subset of `W`
    /// that no other member covers.
    pub fn is_minimal_cover(&self) -> Result<bool> {
        let index = SubsetIndex::new(&self.w, self.r)?;
        let masks: Vec<u128> = self.members.iter().map(|m| index.mask_of(m)).collect();
        if masks.iter().fold(0, |acc, m| acc | m) != index.full() {
            return Ok(false);
        }
        Ok(has_private_parts(&masks))
    }
}

fn canonical(mut set: VertexSet) -> Result<VertexSet> {
    set.sort_unstable();
    if let Some(w) = set.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::param(format!("vertex {} repeated in a set", w[0])));
    }
    Ok(set)
}

/// True iff every r-subset of `w` is contained in some member.
pub fn is_r_cover(w: &[Vertex], members: &[VertexSet], r: usize) -> Result<bool> {
    let w = canonical(w.to_vec())?;
    if w.len() < r {
        return Err(Error::param(format!(
            "target set has {} elements, fewer than r = {r}",
            w.len()
        )));
    }
    let members: Vec<VertexSet> = members
        .iter()
        .cloned()
        .map(canonical)
        .collect::<Result<_>>()?;
    Ok(w.iter()
        .copied()
        .combinations(r)
        .all(|b| members.iter().any(|a| crate::hypercore::is_subset(&b, a))))
}

/// Ranks the r-subsets of a target set so that coverage can be tracked as a
/// bit mask. Bit order is lexicographic order of the r-subsets.
pub(crate) struct SubsetIndex {
    w: VertexSet,
    r: usize,
    count: usize,
    rank: HashMap<Vec<usize>, usize>,
}

/// Largest number of r-subsets of a target set that a coverage mask holds.
pub const MAX_TARGET_SUBSETS: usize = 128;

impl SubsetIndex {
    pub(crate) fn new(w: &[Vertex], r: usize) -> Result<Self> {
        if r < 1 || w.len() < r {
            return Err(Error::param(format!(
                "target set of size {} has no {r}-subsets to cover",
                w.len()
            )));
        }
        let rank: HashMap<Vec<usize>, usize> = (0..w.len())
            .combinations(r)
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        if rank.len() > MAX_TARGET_SUBSETS {
            return Err(Error::param(format!(
                "target set of size {} has {} {r}-subsets, more than {MAX_TARGET_SUBSETS}",
                w.len(),
                rank.len()
            )));
        }
        Ok(Self {
            w: w.to_vec(),
            r,
            count: rank.len(),
            rank,
        })
    }

    pub(crate) fn full(&self) -> u128 {
        if self.count == 128 {
            u128::MAX
        } else {
            (1u128 << self.count) - 1
        }
    }

    /// Bits of the r-subsets of `w` contained in `set`.
    pub(crate) fn mask_of(&self, set: &[Vertex]) -> u128 {
        let positions: Vec<usize> = intersection(&self.w, set)
            .iter()
            .map(|v| self.w.binary_search(v).expect("trace lies in w"))
            .collect();
        positions
            .into_iter()
            .combinations(self.r)
            .fold(0u128, |m, c| m | 1u128 << self.rank[&c])
    }
}

pub(crate) fn has_private_parts(masks: &[u128]) -> bool {
    (0..masks.len()).all(|i| {
        let others = masks
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(0u128, |acc, (_, m)| acc | m);
        masks[i] & !others != 0
    })
}
