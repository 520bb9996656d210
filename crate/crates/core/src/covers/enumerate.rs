use super::{has_private_parts, CoverFamily, SubsetIndex};
use crate::error::Result;
use crate::hypercore::{Vertex, VertexSet};

/// All inclusion-minimal families of at least two candidates that r-cover
/// `w`.
///
/// Branches on the lexicographically first uncovered r-subset and tries the
/// candidates containing it in order; a candidate tried at one branch is
/// excluded from the later sibling branches, so every family is produced
/// once. A branch is cut as soon as some chosen member has no private
/// r-subset left, since adding members never restores one.
///
/// Candidates whose trace on `w` has fewer than `r` elements cover nothing
/// and candidates containing all of `w` only form the trivial cover; both
/// are dropped up front.
pub fn enumerate_minimal_nontrivial_covers(
    w: &[Vertex],
    candidates: &[VertexSet],
    r: usize,
) -> Result<Vec<CoverFamily>> {
    let mut w = w.to_vec();
    w.sort_unstable();
    w.dedup();
    let index = SubsetIndex::new(&w, r)?;
    let full = index.full();

    let mut sets: Vec<VertexSet> = candidates
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c.dedup();
            c
        })
        .collect();
    sets.sort();
    sets.dedup();
    let (sets, masks): (Vec<VertexSet>, Vec<u128>) = sets
        .into_iter()
        .map(|c| {
            let m = index.mask_of(&c);
            (c, m)
        })
        .filter(|&(_, m)| m != 0 && m != full)
        .unzip();

    let mut search = Search {
        masks: &masks,
        full,
        banned: vec![false; masks.len()],
        chosen: Vec::new(),
        found: Vec::new(),
    };
    search.branch(0);

    let mut out: Vec<CoverFamily> = search
        .found
        .into_iter()
        .map(|ids| CoverFamily {
            w: w.clone(),
            r,
            members: {
                let mut m: Vec<VertexSet> = ids.iter().map(|&i| sets[i].clone()).collect();
                m.sort();
                m
            },
        })
        .collect();
    out.sort();
    Ok(out)
}

struct Search<'a> {
    masks: &'a [u128],
    full: u128,
    banned: Vec<bool>,
    chosen: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn branch(&mut self, covered: u128) {
        if covered == self.full {
            if self.chosen.len() >= 2 {
                self.found.push(self.chosen.clone());
            }
            return;
        }
        let target = (!covered).trailing_zeros();
        let bit = 1u128 << target;
        let options: Vec<usize> = (0..self.masks.len())
            .filter(|&i| !self.banned[i] && self.masks[i] & bit != 0)
            .collect();
        let mut newly_banned = Vec::new();
        for &i in &options {
            self.chosen.push(i);
            let chosen_masks: Vec<u128> = self.chosen.iter().map(|&j| self.masks[j]).collect();
            if has_private_parts(&chosen_masks) {
                self.branch(covered | self.masks[i]);
            }
            self.chosen.pop();
            self.banned[i] = true;
            newly_banned.push(i);
        }
        for i in newly_banned {
            self.banned[i] = false;
        }
    }
}
