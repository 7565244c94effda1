//! Exhaustive searches over monic polynomials: similarity witnesses and
//! irreducibility. Desk scale only; every entry point checks a cost guard.

use super::{SkewPoly, SkewRing};
use crate::error::{Error, Result};
use crate::field::Fe;

pub const SIMILARITY_MAX_DEGREE: usize = 4;
pub const SIMILARITY_MAX_FIELD: u32 = 16;
/// Largest number of candidates an irreducibility test may enumerate.
pub const IRREDUCIBLE_GUARD: u128 = 1 << 24;

/// Number of monic polynomials of degree `d`, if it fits in a `u128`.
pub fn monic_count(ring: &SkewRing, d: usize) -> Option<u128> {
    (ring.field().size() as u128).checked_pow(d as u32)
}

/// The monic polynomial of degree `d` whose lower coefficients are the
/// base-`|F|` digits of `idx` (least significant first). Consecutive indices
/// therefore run through coefficient sequences in lexicographic order from
/// the top coefficient down; callers that need a fixed order sort.
pub fn monic_from_index(ring: &SkewRing, d: usize, mut idx: u128) -> SkewPoly {
    let size = ring.field().size() as u128;
    let mut c = Vec::with_capacity(d + 1);
    for _ in 0..d {
        c.push(Fe((idx % size) as u32));
        idx /= size;
    }
    c.push(Fe::ONE);
    SkewPoly {
        ring: ring.clone(),
        c,
    }
}

/// All monic polynomials of degree `d`.
pub fn monic_polys(ring: &SkewRing, d: usize) -> impl Iterator<Item = SkewPoly> + '_ {
    let count = monic_count(ring, d).expect("enumeration size overflows");
    (0..count).map(move |i| monic_from_index(ring, d, i))
}

fn nonzero_polys_below(ring: &SkewRing, n: usize) -> impl Iterator<Item = SkewPoly> + '_ {
    let size = ring.field().size() as u128;
    let count = size.pow(n as u32);
    (1..count).map(move |mut idx| {
        let mut c = Vec::with_capacity(n);
        for _ in 0..n {
            c.push(Fe((idx % size) as u32));
            idx /= size;
        }
        SkewPoly::from_raw(ring, c)
    })
}

impl SkewPoly {
    /// Searches for `h` with `deg h < deg f`, `gcrd(f, h) = 1` and `g h` a
    /// least common left multiple of `f` and `h`. Such an `h` exists iff `f`
    /// and `g` are similar; it is returned as the witness.
    ///
    /// `h` is not required to be monic: for `x - a` and `x - b` the only
    /// witnesses are the constants `c` with `b = a^c`.
    pub fn similar_bruteforce(&self, g: &SkewPoly) -> Result<Option<SkewPoly>> {
        self.check_ring(g)?;
        if !self.is_monic() || !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = self.deg().unwrap();
        let size = self.ring.field().size();
        if n > SIMILARITY_MAX_DEGREE || size > SIMILARITY_MAX_FIELD {
            return Err(Error::GuardExceeded {
                what: "similarity search",
                cost: (size as u128).pow(n as u32),
                limit: (SIMILARITY_MAX_FIELD as u128).pow(SIMILARITY_MAX_DEGREE as u32),
            });
        }
        if g.deg() != Some(n) {
            return Ok(None);
        }
        for h in nonzero_polys_below(&self.ring, n) {
            if !self.gcrd(&h)?.is_one() {
                continue;
            }
            if self.lclm(&h)? == (g * &h).monic()? {
                return Ok(Some(h));
            }
        }
        Ok(None)
    }

    /// Irreducibility by exhaustive search for a monic right divisor of
    /// degree `1..=n/2` or a monic left divisor of degree `1..=(n-1)/2`.
    pub fn is_irreducible_bruteforce(&self) -> Result<bool> {
        let n = self.deg().ok_or(Error::ZeroPolynomial)?;
        if n == 0 {
            return Err(Error::InvalidArgument(
                "constants are units, not irreducibles".into(),
            ));
        }
        let cost = monic_count(&self.ring, n / 2).unwrap_or(u128::MAX);
        if cost > IRREDUCIBLE_GUARD {
            return Err(Error::GuardExceeded {
                what: "irreducibility search",
                cost,
                limit: IRREDUCIBLE_GUARD,
            });
        }
        for d in 1..=n / 2 {
            for g in monic_polys(&self.ring, d) {
                if self.is_right_divisible_by(&g)? {
                    return Ok(false);
                }
            }
        }
        for d in 1..=(n - 1) / 2 {
            for g in monic_polys(&self.ring, d) {
                if self.is_left_divisible_by(&g)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All monic right divisors of degree `d`, by exhaustive search.
    pub fn right_divisors_of_degree(&self, d: usize) -> Result<Vec<SkewPoly>> {
        let mut out = Vec::new();
        for g in monic_polys(&self.ring, d) {
            if self.is_right_divisible_by(&g)? {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Right roots in the coefficient field, sorted.
    pub fn right_roots(&self) -> Vec<Fe> {
        self.ring
            .field()
            .elements()
            .filter(|&a| self.is_right_root(a))
            .collect()
    }
}
