//! Right evaluation, reciprocals, two-sidedness and the commutative image `P_f`.

use super::{SkewPoly, SkewRing};
use crate::error::{Error, Result};
use crate::field::{bracket, conjugate, Fe, Field};
use crate::matrix::Matrix;

/// A sparse commutative polynomial `Σ c_j y^{e_j}` over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommPoly {
    field: Field,
    terms: Vec<(u128, Fe)>,
}

impl CommPoly {
    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> &[(u128, Fe)] {
        &self.terms
    }

    pub fn eval(&self, a: Fe) -> Fe {
        let f = &self.field;
        f.sum(self.terms.iter().map(|&(e, c)| f.mul(c, f.pow_u128(a, e))))
    }
}

impl SkewPoly {
    /// Right evaluation `f(a) = Σ f_i N_i(a)`: the remainder of `f` on right
    /// division by `x - a`.
    pub fn evaluate(&self, a: Fe) -> Fe {
        let ring = &self.ring;
        let f = ring.field();
        let (mut acc, mut norm, mut s) = (Fe::ZERO, Fe::ONE, a);
        for &c in &self.c {
            acc = f.add(acc, f.mul(c, norm));
            norm = f.mul(norm, s);
            s = ring.sigma(s);
        }
        acc
    }

    /// `f(a)` as the constant remainder of right division by `x - a`.
    pub fn evaluate_by_division(&self, a: Fe) -> Fe {
        let r = self
            .right_rem(&self.ring.linear(a))
            .expect("x - a is nonzero");
        r.coeff(0)
    }

    pub fn is_right_root(&self, a: Fe) -> bool {
        self.evaluate(a).is_zero()
    }

    /// `(f g)(a)` by the product rule: `0` when `g(a) = 0`, otherwise
    /// `f(a^{g(a)}) g(a)`. Panics if the rule disagrees with direct
    /// evaluation of the product.
    pub fn product_eval_check(&self, g: &SkewPoly, a: Fe) -> Fe {
        let f = self.ring.field();
        let ga = g.evaluate(a);
        let value = if ga.is_zero() {
            Fe::ZERO
        } else {
            let conj = conjugate(self.ring.aut(), a, ga).expect("g(a) is nonzero");
            f.mul(self.evaluate(conj), ga)
        };
        assert_eq!(
            value,
            (self * g).evaluate(a),
            "product evaluation rule failed"
        );
        value
    }

    /// `ρ_l(g) = Σ x^{r-i} g_i = Σ σ^i(g_{r-i}) x^i`.
    pub fn left_reciprocal(&self) -> Result<SkewPoly> {
        let r = self.deg().ok_or(Error::ZeroPolynomial)?;
        let c = (0..=r)
            .map(|i| self.ring.sigma_pow(i as i64, self.c[r - i]))
            .collect();
        Ok(SkewPoly::from_raw(&self.ring, c))
    }

    /// Classical reciprocal `x^r g(x^{-1})`, meaningful for `σ = id`.
    pub fn reciprocal(&self) -> Result<SkewPoly> {
        self.deg().ok_or(Error::ZeroPolynomial)?;
        Ok(SkewPoly::from_raw(
            &self.ring,
            self.c.iter().rev().copied().collect(),
        ))
    }

    /// Whether `f = c x^t g` with `g` in the center `K[x^m]`, i.e. whether
    /// `f` generates a two-sided ideal.
    pub fn is_two_sided(&self) -> bool {
        let Some(t) = self.c.iter().position(|a| !a.is_zero()) else {
            return true;
        };
        let ring = &self.ring;
        let f = ring.field();
        let m = ring.m() as usize;
        let c_inv = f.inv(self.c[t]).expect("nonzero");
        self.c.iter().enumerate().skip(t).all(|(j, &a)| {
            a.is_zero() || ((j - t) % m == 0 && ring.aut().is_fixed(f.mul(a, c_inv)))
        })
    }

    /// If `f = x^n - a` (monic, two terms), returns `(n, a)`.
    pub fn as_constacyclic(&self) -> Option<(usize, Fe)> {
        let n = self.deg().filter(|&n| n >= 1)?;
        if !self.is_monic() || self.c[1..n].iter().any(|a| !a.is_zero()) {
            return None;
        }
        Some((n, self.ring.field().neg(self.c[0])))
    }

    /// Companion matrix: superdiagonal ones, last row `(-f_0, ..., -f_{n-1})`.
    pub fn companion_matrix(&self) -> Result<Matrix> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = self.deg().unwrap();
        if n == 0 {
            return Err(Error::InvalidArgument(
                "companion matrix needs degree >= 1".into(),
            ));
        }
        let f = self.ring.field();
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n - 1 {
            m.set(i, i + 1, Fe::ONE);
        }
        for j in 0..n {
            m.set(n - 1, j, f.neg(self.c[j]));
        }
        Ok(m)
    }

    /// `P_f = Σ f_i y^⟨i⟩`, so that `f(a) = P_f(a)`.
    pub fn to_commutative_p(&self) -> Result<CommPoly> {
        let q = self.ring.q();
        let mut terms = Vec::new();
        for (i, &c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push((bracket(q, i as u32)?, c));
        }
        Ok(CommPoly {
            field: self.ring.field().clone(),
            terms,
        })
    }
}

impl SkewRing {
    /// Whether two elements are σ-conjugate (`b = a^c` for some `c ≠ 0`).
    pub fn are_conjugate(&self, a: Fe, b: Fe) -> bool {
        if a.is_zero() || b.is_zero() {
            return a == b;
        }
        self.field()
            .nonzero_elements()
            .any(|c| conjugate(self.aut(), a, c).ok() == Some(b))
    }
}
