//! Skew circulants and `(σ, f)`-skew-cyclic codes.
//!
//! Vectors and polynomials correspond through `v_f`: the word
//! `(c_0, ..., c_{n-1})` is the polynomial `Σ c_i x^i` taken modulo `f`.

mod divisors;
mod dual;
mod linear;

pub use divisors::{
    enumerate_right_divisors, enumerate_right_divisors_with, DivisorList, DIVISOR_GUARD,
};
pub use dual::{
    cofactor_constant, cofactor_product_check, self_dual_search, transpose_decomposition, DualCode,
    TransposeParts, SELF_DUAL_GUARD,
};
pub use linear::{DistanceStrategy, LinearCode, DISTANCE_MAX_LENGTH, MESSAGE_GUARD};

use crate::error::{Error, Result};
use crate::field::{Fe, FieldEmbedding};
use crate::matrix::Matrix;
use crate::roots::skew_vandermonde;
use crate::skew::{SkewPoly, SkewRing};

/// A monic modulus `f` of degree `n ≥ 1` with its derived flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modulus {
    f: SkewPoly,
    constant: Option<Fe>,
    two_sided: bool,
}

impl Modulus {
    pub fn new(f: &SkewPoly) -> Result<Self> {
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        if f.deg() == Some(0) {
            return Err(Error::InvalidArgument(
                "modulus must have degree >= 1".into(),
            ));
        }
        Ok(Modulus {
            f: f.clone(),
            constant: f.as_constacyclic().map(|(_, a)| a),
            two_sided: f.is_two_sided(),
        })
    }

    /// `x^n - a`.
    pub fn constacyclic(ring: &SkewRing, n: usize, a: Fe) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("length must be >= 1".into()));
        }
        if !ring.field().contains(a) {
            return Err(Error::MismatchedField);
        }
        Self::new(&ring.x_n_minus(n, a))
    }

    pub fn ring(&self) -> &SkewRing {
        self.f.ring()
    }

    pub fn poly(&self) -> &SkewPoly {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.f.deg().unwrap()
    }

    /// `a` when the modulus is `x^n - a`.
    pub fn constant(&self) -> Option<Fe> {
        self.constant
    }

    pub fn is_constacyclic(&self) -> bool {
        self.constant.is_some()
    }

    pub fn is_two_sided(&self) -> bool {
        self.two_sided
    }

    /// Representative of degree `< n`.
    pub fn reduce(&self, p: &SkewPoly) -> Result<SkewPoly> {
        p.right_rem(&self.f)
    }

    /// `v_f(p̄)`.
    pub fn vector(&self, p: &SkewPoly) -> Result<Vec<Fe>> {
        Ok(self.reduce(p)?.to_vec(self.n()))
    }

    /// `p_f(w)`, the polynomial of a length-`n` word.
    pub fn poly_of(&self, word: &[Fe]) -> Result<SkewPoly> {
        check_len(word, self.n())?;
        self.ring().try_poly(word.to_vec())
    }

    /// `Γ_f(p̄)`.
    pub fn circulant(&self, p: &SkewPoly) -> Result<Matrix> {
        skew_circulant_mod(&self.f, p)
    }
}

fn check_len(word: &[Fe], n: usize) -> Result<()> {
    if word.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "word of length {} for code length {n}",
            word.len()
        )));
    }
    Ok(())
}

/// A skew circulant together with the data it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewCirculant {
    pub matrix: Matrix,
    pub modulus: SkewPoly,
    pub g: SkewPoly,
}

/// `Γ_f(ḡ)`: row `i` is `v_f(x^i ḡ)`.
pub fn skew_circulant(modulus: &Modulus, g: &SkewPoly) -> Result<SkewCirculant> {
    Ok(SkewCirculant {
        matrix: modulus.circulant(g)?,
        modulus: modulus.poly().clone(),
        g: g.clone(),
    })
}

/// `Γ_f(ḡ)` for any nonzero `f` of degree `n ≥ 1`, monic or not. Right
/// division by a non-monic `f` still leaves a unique remainder of degree
/// `< n`.
pub fn skew_circulant_mod(f: &SkewPoly, g: &SkewPoly) -> Result<Matrix> {
    let n = f.deg().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::InvalidArgument(
            "modulus must have degree >= 1".into(),
        ));
    }
    let field = f.ring().field();
    let mut m = Matrix::zeros(field, n, n);
    let mut row = g.right_rem(f)?;
    for i in 0..n {
        for (j, a) in row.to_vec(n).into_iter().enumerate() {
            m.set(i, j, a);
        }
        row = row.left_shift(1).right_rem(f)?;
    }
    Ok(m)
}

/// The `σ`-semilinear shift `(aσ(c_{n-1}), σ(c_0), ..., σ(c_{n-2}))`.
pub fn constacyclic_shift(ring: &SkewRing, a: Fe, word: &[Fe]) -> Vec<Fe> {
    let n = word.len();
    let f = ring.field();
    (0..n)
        .map(|i| {
            if i == 0 {
                f.mul(a, ring.sigma(word[n - 1]))
            } else {
                ring.sigma(word[i - 1])
            }
        })
        .collect()
}

/// Asserts `Γ_f(ḡg') = Γ_f(ḡ)Γ_f(ḡ')` for a two-sided modulus and returns
/// the common matrix.
pub fn two_sided_circulant_product(
    modulus: &Modulus,
    g: &SkewPoly,
    g2: &SkewPoly,
) -> Result<Matrix> {
    if !modulus.is_two_sided() {
        return Err(Error::NotTwoSided);
    }
    let lhs = modulus.circulant(&g.checked_mul(g2)?)?;
    let rhs = modulus.circulant(g)?.mul(&modulus.circulant(g2)?)?;
    assert_eq!(
        lhs, rhs,
        "circulant multiplicativity failed for a two-sided modulus"
    );
    Ok(lhs)
}

/// The `(σ, f)`-skew-cyclic code `v_f(⟨ḡ⟩)` with monic generator `g |ᵣ f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewCyclicCode {
    modulus: Modulus,
    g: SkewPoly,
    gen: Matrix,
}

impl SkewCyclicCode {
    pub fn new(modulus: &Modulus, g: &SkewPoly) -> Result<Self> {
        if g.ring() != modulus.ring() {
            return Err(Error::MismatchedRing);
        }
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let rem = modulus.poly().right_rem(g)?;
        if !rem.is_zero() {
            return Err(Error::NotARightDivisor {
                remainder: rem.to_string(),
            });
        }
        let n = modulus.n();
        let k = n - g.deg().unwrap();
        let mut gen = Matrix::zeros(modulus.ring().field(), k, n);
        for i in 0..k {
            // x^i g has degree < n for i < k: no reduction
            for (j, a) in g.left_shift(i).to_vec(n).into_iter().enumerate() {
                gen.set(i, j, a);
            }
        }
        Ok(SkewCyclicCode {
            modulus: modulus.clone(),
            g: g.clone(),
            gen,
        })
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn ring(&self) -> &SkewRing {
        self.modulus.ring()
    }

    pub fn generator(&self) -> &SkewPoly {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.modulus.n()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// The first `k` rows of `Γ_f(ḡ)`.
    pub fn generator_matrix(&self) -> &Matrix {
        &self.gen
    }

    pub fn circulant(&self) -> Result<Matrix> {
        self.modulus.circulant(&self.g)
    }

    /// `message · G`.
    pub fn encode(&self, message: &[Fe]) -> Result<Vec<Fe>> {
        check_len(message, self.k())?;
        self.gen.vec_mul(message)
    }

    /// Membership by right division, cross-checked against the row space of
    /// the generator matrix.
    pub fn contains(&self, word: &[Fe]) -> Result<bool> {
        let p = self.modulus.poly_of(word)?;
        let by_division = p.is_right_divisible_by(&self.g)?;
        let by_rank = self.gen.row_space_contains(word);
        assert_eq!(by_division, by_rank, "membership tests disagree");
        Ok(by_division)
    }

    /// The plain linear code with the same generator matrix.
    pub fn linear_code(&self) -> LinearCode {
        LinearCode::new(&self.gen)
    }

    /// `Γ_{a^{-1}}(h̄°)` restricted to its first `n - k` rows; codewords
    /// satisfy `H wᵀ = 0`.
    pub fn parity_check_matrix(&self) -> Result<Matrix> {
        let dual = self.dual()?;
        let gamma = dual.code.modulus().circulant(&dual.h_circ)?;
        Ok(gamma.top_rows(self.n() - self.k()))
    }

    /// Code of all words `w` with `w M = 0` for the skew Vandermonde matrix
    /// `M = V_n(a_1, ..., a_r)` of the generator's roots in the target of
    /// `emb`. Fails unless `g = lclm(x - a_i)` with distinct `a_i`; the
    /// roots need not be independent, so `r` may exceed `deg g`.
    pub fn vandermonde_parity_check(&self, roots: &[Fe], emb: &FieldEmbedding) -> Result<Matrix> {
        let ring_l = self.ring().extend(emb)?;
        let mut sorted = roots.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if roots.is_empty() || sorted.len() != roots.len() {
            return Err(Error::NotWedderburn);
        }
        let lin: Vec<SkewPoly> = roots.iter().map(|&a| ring_l.linear(a)).collect();
        let m = ring_l.lclm_all(&lin)?;
        if m != self.g.embed(emb, &ring_l)? {
            return Err(Error::NotWedderburn);
        }
        skew_vandermonde(&ring_l, self.n(), roots)
    }

    /// `σ^{-n}(h)` and `c̃ = σ^{-n}(c)` for `x^n - a = h g`.
    pub fn check_polynomial(&self) -> Result<(SkewPoly, Fe)> {
        let a = self.modulus.constant().ok_or(Error::NotConstacyclic)?;
        let n = self.n();
        let (h, _) = self.modulus.poly().right_div_rem(&self.g)?;
        let c = cofactor_constant(&self.g, n, a)?;
        Ok((
            h.apply_automorphism(-(n as i64)),
            self.ring().sigma_pow(-(n as i64), c),
        ))
    }

    /// Whether `w̄ σ^{-n}(h)` vanishes modulo `x^n - c̃`.
    pub fn check_annihilates(&self, word: &[Fe]) -> Result<bool> {
        let (check, c_tilde) = self.check_polynomial()?;
        let modulus = self.ring().x_n_minus(self.n(), c_tilde);
        Ok(self
            .modulus
            .poly_of(word)?
            .checked_mul(&check)?
            .right_rem(&modulus)?
            .is_zero())
    }
}

/// Whether `w M = 0` after embedding the word into the field of `M`.
pub fn annihilates(m: &Matrix, emb: &FieldEmbedding, word: &[Fe]) -> Result<bool> {
    let lifted: Vec<Fe> = word.iter().map(|&c| emb.embed(c)).collect();
    Ok(m.vec_mul(&lifted)?.iter().all(|a| a.is_zero()))
}
