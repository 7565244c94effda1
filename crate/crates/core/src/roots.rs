//! Vanishing sets, σ-algebraic sets and their minimal polynomials, skew
//! Vandermonde matrices and Wedderburn polynomials.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{norm, Fe, Field, FieldEmbedding};
use crate::matrix::Matrix;
use crate::skew::{SkewPoly, SkewRing};

/// Largest evaluation domain a full sweep may visit.
pub const DOMAIN_LIMIT: u32 = 1 << 20;

/// A finite set of field elements, sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicSet {
    field: Field,
    elems: Vec<Fe>,
}

impl AlgebraicSet {
    pub fn new(field: &Field, elems: impl IntoIterator<Item = Fe>) -> Result<Self> {
        let mut elems: Vec<Fe> = elems.into_iter().collect();
        if elems.iter().any(|&a| !field.contains(a)) {
            return Err(Error::MismatchedField);
        }
        elems.sort_unstable();
        elems.dedup();
        Ok(AlgebraicSet {
            field: field.clone(),
            elems,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn elements(&self) -> &[Fe] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, a: Fe) -> bool {
        self.elems.binary_search(&a).is_ok()
    }

    pub fn union(&self, other: &AlgebraicSet) -> Result<AlgebraicSet> {
        if self.field != other.field {
            return Err(Error::MismatchedField);
        }
        Self::new(&self.field, self.elems.iter().chain(&other.elems).copied())
    }
}

fn sweep(f: &SkewPoly) -> Result<AlgebraicSet> {
    let field = f.ring().field();
    if field.size() > DOMAIN_LIMIT {
        return Err(Error::GuardExceeded {
            what: "vanishing-set sweep",
            cost: field.size() as u128,
            limit: DOMAIN_LIMIT as u128,
        });
    }
    let roots: Vec<Fe> = if field.size() >= 1 << 10 {
        let all: Vec<Fe> = field.elements().collect();
        all.into_par_iter()
            .filter(|&a| f.is_right_root(a))
            .collect()
    } else {
        field.elements().filter(|&a| f.is_right_root(a)).collect()
    };
    AlgebraicSet::new(field, roots)
}

/// `V(f) = {a ∈ F : f(a) = 0}` over the coefficient field.
pub fn vanishing_set(f: &SkewPoly) -> Result<AlgebraicSet> {
    sweep(f)
}

/// `V(f)` over an extension `L ⊇ F`, with `σ` extended as the same
/// `q`-Frobenius of `L`.
pub fn vanishing_set_in(f: &SkewPoly, emb: &FieldEmbedding) -> Result<AlgebraicSet> {
    let big = f.ring().extend(emb)?;
    sweep(&f.embed(emb, &big)?)
}

/// `m_A = lclm(x - a : a ∈ A)`.
pub fn minimal_polynomial(ring: &SkewRing, set: &AlgebraicSet) -> Result<SkewPoly> {
    if set.field() != ring.field() {
        return Err(Error::MismatchedField);
    }
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let lin: Vec<SkewPoly> = set.elements().iter().map(|&a| ring.linear(a)).collect();
    ring.lclm_all(&lin)
}

/// `rk(A) = deg m_A`.
pub fn rank(ring: &SkewRing, set: &AlgebraicSet) -> Result<usize> {
    Ok(minimal_polynomial(ring, set)?
        .deg()
        .expect("minimal polynomial is nonzero"))
}

/// The `n × r` matrix `(N_i(a_j))`.
pub fn skew_vandermonde(ring: &SkewRing, n: usize, points: &[Fe]) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "Vandermonde matrix needs n >= 1".into(),
        ));
    }
    let field = ring.field();
    if points.iter().any(|&a| !field.contains(a)) {
        return Err(Error::MismatchedField);
    }
    let mut m = Matrix::zeros(field, n, points.len());
    for (j, &a) in points.iter().enumerate() {
        for i in 0..n {
            m.set(i, j, norm(ring.aut(), i as u32, a));
        }
    }
    Ok(m)
}

/// Whether `f` is the minimal polynomial of its own vanishing set over the
/// coefficient field.
pub fn is_wedderburn(f: &SkewPoly) -> Result<bool> {
    let f = f.monic()?;
    let v = vanishing_set(&f)?;
    if v.is_empty() {
        return Ok(f.is_one());
    }
    Ok(minimal_polynomial(f.ring(), &v)? == f)
}

/// Wedderburn test with roots taken in an extension field.
pub fn is_wedderburn_in(f: &SkewPoly, emb: &FieldEmbedding) -> Result<bool> {
    let big = f.ring().extend(emb)?;
    let g = f.monic()?.embed(emb, &big)?;
    is_wedderburn(&g)
}

/// The orbit `{τ(a) : τ ∈ Aut(L | K), a ∈ points}` under the relative
/// automorphisms of `emb`.
pub fn relative_orbit(emb: &FieldEmbedding, points: &[Fe]) -> Result<AlgebraicSet> {
    let auts = emb.relative_automorphisms();
    AlgebraicSet::new(
        emb.target(),
        points
            .iter()
            .flat_map(|&a| auts.iter().map(move |t| t.apply(a))),
    )
}

/// The σ-minimal polynomial over `K` of a set of points of `L ⊇ K`: the
/// minimal polynomial of their relative-automorphism orbit, computed in
/// `L[x; σ]` and restricted to `ring_k`.
pub fn sigma_minpoly_of_set(
    points: &[Fe],
    emb: &FieldEmbedding,
    ring_k: &SkewRing,
) -> Result<SkewPoly> {
    let ring_l = ring_k.extend(emb)?;
    let orbit = relative_orbit(emb, points)?;
    minimal_polynomial(&ring_l, &orbit)?.restrict(emb, ring_k)
}

/// [`sigma_minpoly_of_set`] for a single point.
pub fn sigma_minpoly_over_subfield(
    a: Fe,
    emb: &FieldEmbedding,
    ring_k: &SkewRing,
) -> Result<SkewPoly> {
    sigma_minpoly_of_set(&[a], emb, ring_k)
}
