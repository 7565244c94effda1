//! The skew-polynomial ring `F[x; σ]` with `x a = σ(a) x`.
//!
//! Coefficients are always left coefficients: `f = Σ f_i x^i`.

mod euclid;
mod eval;
mod search;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Fe, Field, FieldEmbedding, FrobeniusAut};

pub use euclid::Bezout;
pub use eval::CommPoly;
pub use search::{
    monic_count, monic_from_index, monic_polys, IRREDUCIBLE_GUARD, SIMILARITY_MAX_DEGREE,
    SIMILARITY_MAX_FIELD,
};

struct RingInner {
    field: Field,
    aut: FrobeniusAut,
}

/// `F[x; σ]` for an explicit field and a Frobenius power `σ`.
#[derive(Clone)]
pub struct SkewRing(Arc<RingInner>);

impl PartialEq for SkewRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.aut == other.0.aut
    }
}

impl Eq for SkewRing {}

impl fmt::Debug for SkewRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[x; q={}]", self.0.field, self.q())
    }
}

impl SkewRing {
    /// `σ(a) = a^(p^e)`.
    pub fn new(field: &Field, e: u32) -> Result<Self> {
        Ok(Self::from_aut(FrobeniusAut::new(field, e)?))
    }

    pub fn from_aut(aut: FrobeniusAut) -> Self {
        SkewRing(Arc::new(RingInner {
            field: aut.field().clone(),
            aut,
        }))
    }

    /// The ordinary polynomial ring `F[x]`.
    pub fn commutative(field: &Field) -> Self {
        Self::from_aut(FrobeniusAut::identity(field))
    }

    /// The same ring with `σ` replaced by the identity.
    pub fn to_commutative(&self) -> Self {
        Self::commutative(self.field())
    }

    /// `L[x; σ]` for an extension `L ⊇ F`, with `σ` extended as the same
    /// `q`-Frobenius.
    pub fn extend(&self, emb: &FieldEmbedding) -> Result<Self> {
        if emb.source() != self.field() {
            return Err(Error::MismatchedField);
        }
        Self::new(emb.target(), self.aut().base_exponent())
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.0.field
    }

    #[inline]
    pub fn aut(&self) -> &FrobeniusAut {
        &self.0.aut
    }

    #[inline]
    pub fn sigma(&self, a: Fe) -> Fe {
        self.0.aut.apply(a)
    }

    #[inline]
    pub fn sigma_pow(&self, j: i64, a: Fe) -> Fe {
        self.0.aut.power(j, a)
    }

    /// Size of the fixed field `K = F_q`.
    pub fn q(&self) -> u64 {
        self.0.aut.q()
    }

    /// Order `m` of `σ`; the center is `K[x^m]`.
    pub fn m(&self) -> u32 {
        self.0.aut.order()
    }

    pub fn is_commutative(&self) -> bool {
        self.0.aut.is_identity()
    }

    pub fn zero(&self) -> SkewPoly {
        SkewPoly {
            ring: self.clone(),
            c: Vec::new(),
        }
    }

    pub fn one(&self) -> SkewPoly {
        self.constant(Fe::ONE)
    }

    pub fn x(&self) -> SkewPoly {
        self.monomial(Fe::ONE, 1)
    }

    pub fn constant(&self, a: Fe) -> SkewPoly {
        self.poly(vec![a])
    }

    /// `a x^i`.
    pub fn monomial(&self, a: Fe, i: usize) -> SkewPoly {
        let mut c = vec![Fe::ZERO; i + 1];
        c[i] = a;
        self.poly(c)
    }

    /// `x - a`.
    pub fn linear(&self, a: Fe) -> SkewPoly {
        self.poly(vec![self.field().neg(a), Fe::ONE])
    }

    /// `x^n - a`.
    pub fn x_n_minus(&self, n: usize, a: Fe) -> SkewPoly {
        let mut c = vec![Fe::ZERO; n + 1];
        c[0] = self.field().neg(a);
        c[n] = Fe::ONE;
        self.poly(c)
    }

    /// Polynomial from ascending left coefficients. Panics if a coefficient
    /// lies outside the field; use [`SkewRing::try_poly`] for untrusted input.
    pub fn poly(&self, coeffs: Vec<Fe>) -> SkewPoly {
        self.try_poly(coeffs)
            .expect("coefficient outside the coefficient field")
    }

    pub fn try_poly(&self, coeffs: Vec<Fe>) -> Result<SkewPoly> {
        if coeffs.iter().any(|&a| !self.field().contains(a)) {
            return Err(Error::MismatchedField);
        }
        let mut p = SkewPoly {
            ring: self.clone(),
            c: coeffs,
        };
        p.normalize();
        Ok(p)
    }

    /// Whether `f` lies in the center `K[x^m]`.
    pub fn is_central(&self, f: &SkewPoly) -> bool {
        let m = self.m() as usize;
        f.c.iter()
            .enumerate()
            .all(|(i, &a)| a.is_zero() || (i % m == 0 && self.aut().is_fixed(a)))
    }
}

/// An element of `F[x; σ]`.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    ring: SkewRing,
    c: Vec<Fe>,
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly({self})")
    }
}

impl SkewPoly {
    fn normalize(&mut self) {
        while self.c.last().is_some_and(|a| a.is_zero()) {
            self.c.pop();
        }
    }

    fn from_raw(ring: &SkewRing, c: Vec<Fe>) -> SkewPoly {
        let mut p = SkewPoly {
            ring: ring.clone(),
            c,
        };
        p.normalize();
        p
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    #[inline]
    fn field(&self) -> &Field {
        self.ring.field()
    }

    /// Degree, with `None` standing for the zero polynomial's `-∞`.
    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [Fe::ONE]
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Fe {
        self.c.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    /// Coefficients padded with zeros to length `n`.
    pub fn to_vec(&self, n: usize) -> Vec<Fe> {
        let mut v = self.c.clone();
        v.resize(n.max(v.len()), Fe::ZERO);
        v
    }

    pub fn leading(&self) -> Option<Fe> {
        self.c.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Fe::ONE)
    }

    fn check_ring(&self, other: &SkewPoly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MismatchedRing)
        }
    }

    /// `c · f`.
    pub fn scale_left(&self, a: Fe) -> SkewPoly {
        let f = self.field();
        Self::from_raw(&self.ring, self.c.iter().map(|&x| f.mul(a, x)).collect())
    }

    /// `f · c = Σ f_i σ^i(c) x^i`.
    pub fn scale_right(&self, a: Fe) -> SkewPoly {
        let f = self.field();
        let mut s = a;
        let mut out = Vec::with_capacity(self.c.len());
        for &x in &self.c {
            out.push(f.mul(x, s));
            s = self.ring.sigma(s);
        }
        Self::from_raw(&self.ring, out)
    }

    /// Left-monic normalization `lc(f)^{-1} f`, the generator of the left
    /// ideal `F[x;σ] f` fixed by the monic convention.
    pub fn monic(&self) -> Result<SkewPoly> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale_left(self.field().inv(lc)?))
    }

    /// Right-monic normalization `f c` with `c = σ^{-n}(lc^{-1})`, used for
    /// right ideals `f F[x;σ]`.
    pub fn monic_right(&self) -> Result<SkewPoly> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        let n = self.c.len() as i64 - 1;
        let c = self.ring.sigma_pow(-n, self.field().inv(lc)?);
        Ok(self.scale_right(c))
    }

    /// `f · x^k`.
    pub fn shift(&self, k: usize) -> SkewPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Fe::ZERO; k];
        c.extend_from_slice(&self.c);
        SkewPoly {
            ring: self.ring.clone(),
            c,
        }
    }

    /// `x^k · f = Σ σ^k(f_i) x^{i+k}`.
    pub fn left_shift(&self, k: usize) -> SkewPoly {
        self.apply_automorphism(k as i64).shift(k)
    }

    /// Coefficientwise `σ^j`, a ring automorphism of `F[x; σ]`.
    pub fn apply_automorphism(&self, j: i64) -> SkewPoly {
        Self::from_raw(
            &self.ring,
            self.c.iter().map(|&a| self.ring.sigma_pow(j, a)).collect(),
        )
    }

    pub fn checked_add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(other)?;
        let f = self.field();
        let n = self.c.len().max(other.c.len());
        Ok(Self::from_raw(
            &self.ring,
            (0..n)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    pub fn checked_sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(other)?;
        let f = self.field();
        let n = self.c.len().max(other.c.len());
        Ok(Self::from_raw(
            &self.ring,
            (0..n)
                .map(|i| f.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    /// `Σ_{i,j} f_i σ^i(g_j) x^{i+j}`.
    pub fn checked_mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        let f = self.field();
        let mut out = vec![Fe::ZERO; self.c.len() + other.c.len() - 1];
        let mut twisted = other.c.clone();
        for (i, &a) in self.c.iter().enumerate() {
            if !a.is_zero() {
                for (j, &b) in twisted.iter().enumerate() {
                    out[i + j] = f.add(out[i + j], f.mul(a, b));
                }
            }
            if self.ring.is_commutative() {
                continue;
            }
            for b in twisted.iter_mut() {
                *b = self.ring.sigma(*b);
            }
        }
        Ok(Self::from_raw(&self.ring, out))
    }

    /// `f^k`.
    pub fn pow(&self, k: u32) -> SkewPoly {
        (0..k).fold(self.ring.one(), |acc, _| &acc * self)
    }

    /// Image under a field embedding, as a polynomial of `target`.
    pub fn embed(&self, emb: &FieldEmbedding, target: &SkewRing) -> Result<SkewPoly> {
        if emb.source() != self.field() || emb.target() != target.field() {
            return Err(Error::MismatchedField);
        }
        Ok(Self::from_raw(
            target,
            self.c.iter().map(|&a| emb.embed(a)).collect(),
        ))
    }

    /// Pulls every coefficient back through `emb` into `target`.
    pub fn restrict(&self, emb: &FieldEmbedding, target: &SkewRing) -> Result<SkewPoly> {
        if emb.target() != self.field() || emb.source() != target.field() {
            return Err(Error::MismatchedField);
        }
        let c = self
            .c
            .iter()
            .map(|&a| emb.restrict(a).ok_or(Error::CoefficientNotInSubfield))
            .collect::<Result<_>>()?;
        Ok(Self::from_raw(target, c))
    }
}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_add(rhs)
            .expect("operands from different rings")
    }
}

impl Sub for &SkewPoly {
    type Output = SkewPoly;
    fn sub(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_sub(rhs)
            .expect("operands from different rings")
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_mul(rhs)
            .expect("operands from different rings")
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        let f = self.field();
        SkewPoly::from_raw(&self.ring, self.c.iter().map(|&a| f.neg(a)).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SkewPoly {
            type Output = SkewPoly;
            fn $m(self, rhs: SkewPoly) -> SkewPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
