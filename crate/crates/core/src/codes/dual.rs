//! Products and transposes of constacyclic skew circulants, dual codes,
//! check polynomials and self-dual codes.

use rayon::prelude::*;

use super::{Modulus, SkewCyclicCode};
use crate::error::{Error, Result};
use crate::field::Fe;
use crate::matrix::Matrix;
use crate::skew::{monic_count, monic_from_index, SkewPoly, SkewRing};

/// Largest number of monic half-degree candidates a self-dual search may visit.
pub const SELF_DUAL_GUARD: u128 = 1 << 20;

fn cofactor(g: &SkewPoly, n: usize, a: Fe) -> Result<SkewPoly> {
    let f = g.ring().x_n_minus(n, a);
    let (h, r) = f.right_div_rem(g)?;
    if !r.is_zero() {
        return Err(Error::NotARightDivisor {
            remainder: r.to_string(),
        });
    }
    Ok(h)
}

/// `c = σ^n(g_0) a g_0^{-1}` for `x^n - a = h g`; asserts `x^n - c = σ^n(g) h`.
pub fn cofactor_constant(g: &SkewPoly, n: usize, a: Fe) -> Result<Fe> {
    let ring = g.ring();
    let f = ring.field();
    let g0 = g.coeff(0);
    if g0.is_zero() {
        return Err(Error::InvalidArgument(
            "generator has zero constant coefficient".into(),
        ));
    }
    let h = cofactor(g, n, a)?;
    let c = f.mul(f.mul(ring.sigma_pow(n as i64, g0), a), f.inv(g0)?);
    assert_eq!(
        ring.x_n_minus(n, c),
        &g.apply_automorphism(n as i64) * &h,
        "x^n - c = σ^n(g) h failed"
    );
    Ok(c)
}

/// Asserts `Γ_a(ḡ'g) = Γ_c(ḡ') Γ_a(ḡ)` with `c` from [`cofactor_constant`]
/// and returns the common matrix.
pub fn cofactor_product_check(g: &SkewPoly, n: usize, a: Fe, g2: &SkewPoly) -> Result<Matrix> {
    let ring = g.ring();
    let c = cofactor_constant(g, n, a)?;
    let ma = Modulus::constacyclic(ring, n, a)?;
    let mc = Modulus::constacyclic(ring, n, c)?;
    let lhs = ma.circulant(&g2.checked_mul(g)?)?;
    let rhs = mc.circulant(g2)?.mul(&ma.circulant(g)?)?;
    assert_eq!(lhs, rhs, "skew circulant product law failed");
    Ok(lhs)
}

/// Polynomials describing `Γ_a(ḡ)ᵀ` for `g |ᵣ x^n - a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransposeParts {
    /// `g^# = a σ^k(ρ_l(g)) x^k`.
    pub g_sharp: SkewPoly,
    /// `g° = a σ^k(ρ_l(g))`.
    pub g_circ: SkewPoly,
    pub c: Fe,
    pub k: usize,
}

/// Computes `g^#`, `g°` and `c`, and asserts
/// `Γ_a(ḡ)ᵀ = Γ_{c^{-1}}(ḡ^#) = Γ_{σ^k(c^{-1})}(ḡ°) Γ_{c^{-1}}(x̄^k)` and
/// `g° |ᵣ x^n - σ^k(c^{-1})`.
pub fn transpose_decomposition(g: &SkewPoly, n: usize, a: Fe) -> Result<TransposeParts> {
    let ring = g.ring();
    let f = ring.field();
    let c = cofactor_constant(g, n, a)?;
    let k = n - g.deg().unwrap();
    let c_inv = f.inv(c)?;
    let c2 = ring.sigma_pow(k as i64, c_inv);
    let g_circ = g
        .left_reciprocal()?
        .apply_automorphism(k as i64)
        .scale_left(a);
    let g_sharp = g_circ.shift(k);

    let lhs = Modulus::constacyclic(ring, n, a)?.circulant(g)?.transpose();
    let m_cinv = Modulus::constacyclic(ring, n, c_inv)?;
    let m_c2 = Modulus::constacyclic(ring, n, c2)?;
    assert_eq!(
        lhs,
        m_cinv.circulant(&g_sharp)?,
        "transpose is not the circulant of g#"
    );
    let product = m_c2
        .circulant(&g_circ)?
        .mul(&m_cinv.circulant(&ring.monomial(Fe::ONE, k))?)?;
    assert_eq!(lhs, product, "transpose factorization failed");
    assert!(
        ring.x_n_minus(n, c2).is_right_divisible_by(&g_circ)?,
        "g° does not divide x^n - σ^k(c^-1)"
    );
    Ok(TransposeParts {
        g_sharp,
        g_circ,
        c,
        k,
    })
}

/// The dual of a skew-constacyclic code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCode {
    /// `C^⊥` over `x^n - a^{-1}`, generated by the monic form of `h°`.
    pub code: SkewCyclicCode,
    /// Cofactor `h` with `x^n - a = h g`.
    pub h: SkewPoly,
    /// `h° = ρ_l(σ^{-n}(h))` before normalization.
    pub h_circ: SkewPoly,
    /// Parity-check matrix of `C^⊥`: the first `k` rows of `Γ_a(ḡ)`.
    pub parity_check: Matrix,
}

impl SkewCyclicCode {
    /// `C^⊥`, with the duality identities asserted on the way.
    pub fn dual(&self) -> Result<DualCode> {
        let a = self.modulus().constant().ok_or(Error::NotConstacyclic)?;
        let ring = self.ring();
        let n = self.n();
        let k = self.k();
        let h = cofactor(self.generator(), n, a)?;
        let h_circ = h.apply_automorphism(-(n as i64)).left_reciprocal()?;
        let dual_mod = Modulus::constacyclic(ring, n, ring.field().inv(a)?)?;
        assert!(
            dual_mod.poly().is_right_divisible_by(&h_circ)?,
            "h° does not divide x^n - a^-1"
        );
        let gamma_h = dual_mod.circulant(&h_circ)?;
        assert!(
            self.circulant()?.mul(&gamma_h.transpose())?.is_zero(),
            "Γ_a(g) Γ_(a^-1)(h°)ᵀ is nonzero"
        );
        assert_eq!(gamma_h.rank(), n - k, "rank of Γ_(a^-1)(h°) is not n - k");
        let code = SkewCyclicCode::new(&dual_mod, &h_circ.monic()?)?;
        Ok(DualCode {
            code,
            h,
            h_circ,
            parity_check: self.generator_matrix().clone(),
        })
    }
}

/// Self-dual `(σ, ε)`-skew-constacyclic codes of even length `n`: one code
/// `v(⟨h̄°⟩)` per factorization `x^n - ε = h h°`, deduplicated by generator.
/// `h` ranges over all polynomials of degree `n/2`, not only monic ones.
pub fn self_dual_search(ring: &SkewRing, n: usize, epsilon: i64) -> Result<Vec<SkewCyclicCode>> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::ConditionViolated(format!(
            "self-dual constacyclic codes need even length, got {n}"
        )));
    }
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::InvalidArgument(format!(
            "epsilon must be 1 or -1, got {epsilon}"
        )));
    }
    let k = n / 2;
    let cost = monic_count(ring, k).unwrap_or(u128::MAX);
    if cost > SELF_DUAL_GUARD {
        return Err(Error::GuardExceeded {
            what: "self-dual search",
            cost,
            limit: SELF_DUAL_GUARD,
        });
    }
    let field = ring.field();
    let eps = field.from_int(epsilon);
    let target = ring.x_n_minus(n, eps);
    let lead: Vec<Fe> = field.nonzero_elements().collect();
    let mut gens: Vec<SkewPoly> = (0..cost as u64)
        .into_par_iter()
        .flat_map_iter(|idx| {
            let monic = monic_from_index(ring, k, idx as u128);
            lead.iter()
                .filter_map(|&u| {
                    let mut c = monic.coeffs().to_vec();
                    c[k] = u;
                    let h = ring.poly(c);
                    let h_circ = h.apply_automorphism(-(n as i64)).left_reciprocal().ok()?;
                    (&h * &h_circ == target).then(|| h_circ.monic().expect("nonzero"))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    gens.sort_by(|p, q| p.coeffs().cmp(q.coeffs()));
    gens.dedup();
    let modulus = Modulus::new(&target)?;
    gens.iter()
        .map(|g| {
            let code = SkewCyclicCode::new(&modulus, g)?;
            let dual = code.dual()?;
            assert!(
                dual.code
                    .generator_matrix()
                    .same_row_space(code.generator_matrix()),
                "search returned a code that is not self-dual"
            );
            Ok(code)
        })
        .collect()
}
