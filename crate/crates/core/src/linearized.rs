//! `q`-linearized polynomials `Σ f_i y^{q^i}` and the ring isomorphism
//! `Λ: F[x; σ] → (L, +, ∘)` sending `x^i` to `y^{q^i}`, together with Moore
//! and Dickson matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field, FrobeniusAut};
use crate::matrix::Matrix;
use crate::skew::{SkewPoly, SkewRing};

/// `Σ f_i y^{q^i}` over `F_{q^m}`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearizedPoly {
    aut: FrobeniusAut,
    c: Vec<Fe>,
}

impl fmt::Debug for LinearizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearizedPoly({self})")
    }
}

impl fmt::Display for LinearizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.aut.field();
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, &a)| {
                let mono = if i == 0 {
                    "y".to_string()
                } else {
                    format!("y^q^{i}")
                };
                if a == Fe::ONE {
                    mono
                } else {
                    format!("{}*{mono}", field.format(a))
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

impl LinearizedPoly {
    pub fn new(aut: &FrobeniusAut, coeffs: Vec<Fe>) -> Self {
        let mut p = LinearizedPoly {
            aut: aut.clone(),
            c: coeffs,
        };
        while p.c.last().is_some_and(|a| a.is_zero()) {
            p.c.pop();
        }
        p
    }

    /// The identity map `y`.
    pub fn identity(aut: &FrobeniusAut) -> Self {
        Self::new(aut, vec![Fe::ONE])
    }

    /// `y^{q^i}`.
    pub fn frobenius_power(aut: &FrobeniusAut, i: usize) -> Self {
        let mut c = vec![Fe::ZERO; i + 1];
        c[i] = Fe::ONE;
        Self::new(aut, c)
    }

    pub fn aut(&self) -> &FrobeniusAut {
        &self.aut
    }

    fn field(&self) -> &Field {
        self.aut.field()
    }

    /// Coefficients `f_i` of `y^{q^i}`.
    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.c.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `Σ f_i a^{q^i}`.
    pub fn eval(&self, a: Fe) -> Fe {
        let f = self.field();
        let (mut acc, mut s) = (Fe::ZERO, a);
        for &c in &self.c {
            acc = f.add(acc, f.mul(c, s));
            s = self.aut.apply(s);
        }
        acc
    }

    pub fn add(&self, other: &LinearizedPoly) -> Result<LinearizedPoly> {
        if self.aut != other.aut {
            return Err(Error::MismatchedField);
        }
        let f = self.field();
        let n = self.c.len().max(other.c.len());
        Ok(Self::new(
            &self.aut,
            (0..n)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    /// `F ∘ G = Σ_{i,j} F_i G_j^{q^i} y^{q^{i+j}}`, kept unreduced.
    pub fn compose(&self, other: &LinearizedPoly) -> Result<LinearizedPoly> {
        if self.aut != other.aut {
            return Err(Error::MismatchedField);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::new(&self.aut, Vec::new()));
        }
        let f = self.field();
        let mut out = vec![Fe::ZERO; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                let t = f.mul(a, self.aut.power(i as i64, b));
                out[i + j] = f.add(out[i + j], t);
            }
        }
        Ok(Self::new(&self.aut, out))
    }

    /// Reduction modulo `y^{q^m} - y`: exponents `q^i` fold to `q^{i mod m}`.
    /// Both forms induce the same map on `F_{q^m}`.
    pub fn reduce(&self) -> LinearizedPoly {
        let m = self.aut.order() as usize;
        let f = self.field();
        let mut out = vec![Fe::ZERO; m.min(self.c.len())];
        for (i, &a) in self.c.iter().enumerate() {
            out[i % m] = f.add(out[i % m], a);
        }
        Self::new(&self.aut, out)
    }

    /// Reduced composition, the product of the quotient ring.
    pub fn compose_reduced(&self, other: &LinearizedPoly) -> Result<LinearizedPoly> {
        Ok(self.compose(other)?.reduce())
    }

    /// `F_q`-dimension of the kernel of the induced map on `F_{q^m}`.
    pub fn kernel_dimension(&self) -> usize {
        self.aut.order() as usize - dickson_matrix(self).rank()
    }
}

/// `Λ(g) = Σ g_i y^{q^i}`.
pub fn lambda(g: &SkewPoly) -> LinearizedPoly {
    LinearizedPoly::new(g.ring().aut(), g.coeffs().to_vec())
}

/// `Λ^{-1}(F) = Σ F_i x^i` in `ring`.
pub fn lambda_inv(lin: &LinearizedPoly, ring: &SkewRing) -> Result<SkewPoly> {
    if lin.aut() != ring.aut() {
        return Err(Error::MismatchedRing);
    }
    Ok(ring.poly(lin.coeffs().to_vec()))
}

/// Moore matrix `(b_j^{q^i})` with `rows` rows.
pub fn moore_matrix(aut: &FrobeniusAut, basis: &[Fe], rows: usize) -> Result<Matrix> {
    if basis.is_empty() || rows == 0 {
        return Err(Error::DimensionMismatch(
            "Moore matrix needs a nonempty family and rows >= 1".into(),
        ));
    }
    let f = aut.field();
    let mut s = Matrix::zeros(f, rows, basis.len());
    for (j, &b) in basis.iter().enumerate() {
        let mut cur = b;
        for i in 0..rows {
            s.set(i, j, cur);
            cur = aut.apply(cur);
        }
    }
    Ok(s)
}

/// Dickson matrix `D_{i,l} = σ^i(g_{(l - i) mod m})` of the reduced form of `g`.
pub fn dickson_matrix(g: &LinearizedPoly) -> Matrix {
    let g = g.reduce();
    let aut = g.aut();
    let m = aut.order() as usize;
    let mut d = Matrix::zeros(aut.field(), m, m);
    for i in 0..m {
        for l in 0..m {
            d.set(i, l, aut.power(i as i64, g.coeff((l + m - i) % m)));
        }
    }
    d
}

/// Matrix `M` of the `F_q`-linear map `a ↦ g(a)` in the basis `b`, with the
/// column convention `g(b_j) = Σ_k M_{kj} b_k`. Coordinates come from the
/// inverse Moore matrix, so `S M S^{-1} = D_g`.
pub fn map_matrix(g: &LinearizedPoly, basis: &[Fe]) -> Result<Matrix> {
    let aut = g.aut();
    let m = aut.order() as usize;
    if basis.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "basis of size {} for dimension {m}",
            basis.len()
        )));
    }
    let s = moore_matrix(aut, basis, m)?;
    let s_inv = s
        .inverse()
        .map_err(|_| Error::InvalidArgument("family is not an F_q-basis".into()))?;
    let mut out = Matrix::zeros(aut.field(), m, m);
    for (j, &b) in basis.iter().enumerate() {
        let v = g.eval(b);
        let conj: Vec<Fe> = (0..m).map(|i| aut.power(i as i64, v)).collect();
        let coords = s_inv.mul_vec(&conj)?;
        for (k, c) in coords.into_iter().enumerate() {
            out.set(k, j, c);
        }
    }
    Ok(out)
}

/// `(g(b^{q-1}) = 0, Λ(g)(b) = 0)`; the two always agree for `b ≠ 0`.
pub fn root_correspondence(g: &SkewPoly, b: Fe) -> Result<(bool, bool)> {
    if b.is_zero() {
        return Err(Error::InvalidArgument("b must be nonzero".into()));
    }
    let f = g.ring().field();
    let skew = g
        .evaluate(f.pow_u128(b, g.ring().q() as u128 - 1))
        .is_zero();
    let lin = lambda(g).eval(b).is_zero();
    assert_eq!(skew, lin, "root correspondence failed");
    Ok((skew, lin))
}
