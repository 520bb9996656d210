use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;

use super::CoverFamily;
use crate::error::{Error, Result};
use crate::hypercore::{clique_density, Rational, VertexSet};

/// `(|E| - 1) / m_r(K_t^(r)) + Σ_A (|A| - r)`.
pub fn phi(family: &CoverFamily, t: usize) -> Result<Rational> {
    let r = family.r;
    let density = clique_density(t, r)?;
    if family.is_empty() {
        return Err(Error::param("cover functional needs a non-empty family"));
    }
    if let Some(a) = family.members.iter().find(|a| a.len() < r) {
        return Err(Error::param(format!(
            "member {a:?} has fewer than {r} elements"
        )));
    }
    let excess: usize = family.members.iter().map(|a| a.len() - r).sum();
    let count = Rational::from_integer(BigInt::from(family.len() - 1));
    Ok(count / density + Rational::from_integer(BigInt::from(excess)))
}

/// Left-hand side `(|E| - 1)(r - 1/m_r(K_t^(r))) - Σ_A |A|` of the cover
/// inequality, evaluated without any precondition checks.
pub fn cover_inequality_lhs(family: &CoverFamily, t: usize) -> Result<Rational> {
    let r = family.r;
    let density = clique_density(t, r)?;
    let slope = Rational::from_integer(BigInt::from(r)) - density.recip();
    let count = Rational::from_integer(BigInt::from(family.len() as i64 - 1));
    let total: usize = family.members.iter().map(Vec::len).sum();
    Ok(count * slope - Rational::from_integer(BigInt::from(total)))
}

/// Checks `(|E| - 1)(r - 1/m_r(K_t^(r))) - Σ_A |A| <= -t` exactly.
///
/// The family must be a minimal non-trivial r-cover of a `t`-element set;
/// anything else is a parameter error rather than a `false`.
pub fn check_cover_inequality(family: &CoverFamily, t: usize) -> Result<bool> {
    if family.w.len() != t {
        return Err(Error::param(format!(
            "target set has {} elements, expected t = {t}",
            family.w.len()
        )));
    }
    if family.len() < 2 {
        return Err(Error::param(
            "the cover inequality concerns non-trivial covers",
        ));
    }
    if !family.is_cover()? {
        return Err(Error::param("family is not an r-cover of its target set"));
    }
    if !family.is_minimal_cover()? {
        return Err(Error::param("family is not a minimal cover"));
    }
    let bound = Rational::from_integer(-BigInt::from(t));
    Ok(cover_inequality_lhs(family, t)? <= bound)
}

/// Replaces the members, one at a time in ascending order, by all their
/// r-subsets. Returns the families `E_0 = E, E_1, ..., E_|E|` with their
/// functional values.
pub fn reduction_sequence(family: &CoverFamily, t: usize) -> Result<Vec<(CoverFamily, Rational)>> {
    let r = family.r;
    if let Some(a) = family.members.iter().find(|a| a.len() < r) {
        return Err(Error::param(format!(
            "member {a:?} has fewer than {r} elements"
        )));
    }
    let mut current: BTreeSet<VertexSet> = family.members.iter().cloned().collect();
    let snapshot = |set: &BTreeSet<VertexSet>| -> Result<(CoverFamily, Rational)> {
        let fam = CoverFamily {
            w: family.w.clone(),
            r,
            members: set.iter().cloned().collect(),
        };
        let value = phi(&fam, t)?;
        Ok((fam, value))
    };
    let mut out = vec![snapshot(&current)?];
    for a in &family.members {
        current.remove(a);
        current.extend(a.iter().copied().combinations(r));
        out.push(snapshot(&current)?);
    }
    Ok(out)
}
