//! Enumeration of all monic right divisors of a modulus.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::cancel::CancelToken;
use crate::error::{Error, Result};
use crate::skew::{monic_count, monic_from_index, SkewPoly};

/// Largest candidate count per degree.
pub const DIVISOR_GUARD: u128 = 1 << 25;

/// Monic right divisors grouped by degree, each group sorted
/// lexicographically by coefficient sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorList {
    n: usize,
    by_degree: BTreeMap<usize, Vec<SkewPoly>>,
}

impl DivisorList {
    pub fn degree_of_modulus(&self) -> usize {
        self.n
    }

    pub fn by_degree(&self) -> &BTreeMap<usize, Vec<SkewPoly>> {
        &self.by_degree
    }

    pub fn of_degree(&self, d: usize) -> &[SkewPoly] {
        self.by_degree.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, d: usize) -> usize {
        self.of_degree(d).len()
    }

    /// All listed divisors.
    pub fn total(&self) -> usize {
        self.by_degree.values().map(Vec::len).sum()
    }

    /// Listed divisors of degree `1..n`.
    pub fn nontrivial(&self) -> usize {
        self.by_degree
            .iter()
            .filter(|(&d, _)| d > 0 && d < self.n)
            .map(|(_, v)| v.len())
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SkewPoly> {
        self.by_degree.values().flatten()
    }
}

/// All monic right divisors of the monic `f`, optionally only those of one
/// degree. Degrees `d ≤ n/2` test every monic `g` of degree `d`; larger
/// degrees run over monic left cofactors `h` of degree `n - d`, whose exact
/// left quotients are the divisors.
pub fn enumerate_right_divisors(f: &SkewPoly, degree: Option<usize>) -> Result<DivisorList> {
    enumerate_right_divisors_with(f, degree, &CancelToken::new())
}

pub fn enumerate_right_divisors_with(
    f: &SkewPoly,
    degree: Option<usize>,
    cancel: &CancelToken,
) -> Result<DivisorList> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.deg().unwrap();
    let degrees: Vec<usize> = match degree {
        Some(d) if d > n => return Err(Error::InvalidArgument(format!("degree {d} exceeds {n}"))),
        Some(d) => vec![d],
        None => (0..=n).collect(),
    };
    let ring = f.ring();
    for &d in &degrees {
        let cost = monic_count(ring, d.min(n - d)).unwrap_or(u128::MAX);
        if cost > DIVISOR_GUARD {
            return Err(Error::GuardExceeded {
                what: "right-divisor enumeration",
                cost,
                limit: DIVISOR_GUARD,
            });
        }
    }
    let mut by_degree = BTreeMap::new();
    for d in degrees {
        let direct = d <= n / 2;
        let cand_deg = if direct { d } else { n - d };
        let count = monic_count(ring, cand_deg).unwrap() as u64;
        let found: Vec<Option<SkewPoly>> = (0..count)
            .into_par_iter()
            .map(|idx| {
                if cancel.is_cancelled() {
                    return Err(Error::Cancelled);
                }
                let cand = monic_from_index(ring, cand_deg, idx as u128);
                if direct {
                    Ok(f.is_right_divisible_by(&cand)?.then_some(cand))
                } else {
                    let (s, r) = f.left_div_rem(&cand)?;
                    Ok(r.is_zero().then_some(s))
                }
            })
            .collect::<Result<_>>()?;
        let mut list: Vec<SkewPoly> = found.into_iter().flatten().collect();
        list.sort_by(|p, q| p.coeffs().cmp(q.coeffs()));
        by_degree.insert(d, list);
    }
    Ok(DivisorList { n, by_degree })
}
