use super::{Fe, Field};
use crate::error::{Error, Result};

/// The automorphism `σ(a) = a^q` with `q = p^e`, where `e | d`.
///
/// `σ` has order `m = d / e` and fixed field `F_q`. Choosing `e = d` gives the
/// identity, i.e. the commutative configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusAut {
    field: Field,
    e: u32,
}

impl FrobeniusAut {
    pub fn new(field: &Field, e: u32) -> Result<Self> {
        let d = field.degree();
        if e == 0 || !d.is_multiple_of(e) {
            return Err(Error::InvalidAutomorphism(format!(
                "exponent {e} must be a positive divisor of the degree {d}"
            )));
        }
        Ok(FrobeniusAut {
            field: field.clone(),
            e,
        })
    }

    pub fn identity(field: &Field) -> Self {
        FrobeniusAut {
            field: field.clone(),
            e: field.degree(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn base_exponent(&self) -> u32 {
        self.e
    }

    /// Size of the fixed field.
    pub fn q(&self) -> u64 {
        (self.field.p() as u64).pow(self.e)
    }

    /// Order of σ.
    pub fn order(&self) -> u32 {
        self.field.degree() / self.e
    }

    pub fn is_identity(&self) -> bool {
        self.order() == 1
    }

    #[inline]
    pub fn apply(&self, a: Fe) -> Fe {
        self.field.frobenius(a, self.e as i64)
    }

    /// `σ^j(a)` for any integer `j` (reduced modulo the order).
    #[inline]
    pub fn power(&self, j: i64, a: Fe) -> Fe {
        let m = self.order() as i64;
        self.field.frobenius(a, j.rem_euclid(m) * self.e as i64)
    }

    /// Whether `a` lies in the fixed field `F_q`.
    pub fn is_fixed(&self, a: Fe) -> bool {
        self.apply(a) == a
    }

    pub fn fixed_field(&self) -> Vec<Fe> {
        self.field
            .elements()
            .filter(|&a| self.is_fixed(a))
            .collect()
    }
}

/// A general automorphism `a ↦ a^(p^k)` of a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldAut {
    field: Field,
    p_power: u32,
}

impl FieldAut {
    pub fn new(field: &Field, p_power: u32) -> Self {
        FieldAut {
            field: field.clone(),
            p_power: p_power % field.degree(),
        }
    }

    pub fn p_power(&self) -> u32 {
        self.p_power
    }

    pub fn is_identity(&self) -> bool {
        self.p_power == 0
    }

    pub fn apply(&self, a: Fe) -> Fe {
        self.field.frobenius(a, self.p_power as i64)
    }
}

/// `⟨i⟩ = (q^i - 1)/(q - 1) = 1 + q + ... + q^(i-1)`.
pub fn bracket(q: u64, i: u32) -> Result<u128> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!(
            "bracket needs q >= 2, got {q}"
        )));
    }
    let mut acc: u128 = 0;
    let mut pw: u128 = 1;
    for _ in 0..i {
        acc = acc.checked_add(pw).ok_or(Error::Overflow)?;
        pw = pw.checked_mul(q as u128).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// `⟨i⟩` reduced modulo `modulus`.
pub(crate) fn bracket_mod(q: u64, i: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let (mut acc, mut pw) = (0u64, 1u64);
    for _ in 0..i {
        acc = (acc + pw) % modulus;
        pw = (pw as u128 * q as u128 % modulus as u128) as u64;
    }
    acc
}

/// `N_i(a) = a^⟨i⟩`, via the closed form.
pub fn norm(aut: &FrobeniusAut, i: u32, a: Fe) -> Fe {
    if i == 0 {
        return Fe::ONE;
    }
    let f = aut.field();
    if a.is_zero() {
        return Fe::ZERO;
    }
    let e = bracket_mod(aut.q(), i as u64, f.order() as u64);
    f.pow(a, e as i64)
}

/// `N_i(a)` via `N_{i+1}(a) = N_i(a) σ^i(a)`.
pub fn norm_by_recurrence(aut: &FrobeniusAut, i: u32, a: Fe) -> Fe {
    let f = aut.field();
    let mut n = Fe::ONE;
    let mut s = a;
    for _ in 0..i {
        n = f.mul(n, s);
        s = aut.apply(s);
    }
    n
}

/// `a^c = σ(c) a c^{-1}`.
pub fn conjugate(aut: &FrobeniusAut, a: Fe, c: Fe) -> Result<Fe> {
    let f = aut.field();
    Ok(f.mul(f.mul(aut.apply(c), a), f.inv(c)?))
}

/// The σ-conjugacy class `Δ(a)`, sorted.
pub fn conjugacy_class(aut: &FrobeniusAut, a: Fe) -> Vec<Fe> {
    let f = aut.field();
    if a.is_zero() {
        return vec![Fe::ZERO];
    }
    let mut class: Vec<Fe> = f
        .nonzero_elements()
        .map(|c| conjugate(aut, a, c).expect("c is nonzero"))
        .collect();
    class.sort_unstable();
    class.dedup();
    class
}

#[cfg(test)]
mod tests {
    use super::super::presets;
    use super::*;

    #[test]
    fn bracket_values() {
        assert_eq!(bracket(2, 0).unwrap(), 0);
        assert_eq!(bracket(2, 1).unwrap(), 1);
        assert_eq!(bracket(2, 3).unwrap(), 1 + 2 + 4);
        assert_eq!(bracket(3, 4).unwrap(), (81 - 1) / 2);
        assert_eq!(bracket(1 << 20, 10), Err(Error::Overflow));
        assert!(bracket(1, 3).is_err());
    }

    #[test]
    fn frobenius_f4() {
        let f = Field::new(presets::f4());
        let sigma = FrobeniusAut::new(&f, 1).unwrap();
        let w = f.generator();
        assert_eq!(sigma.apply(w), f.mul(w, w));
        assert_eq!(sigma.apply(Fe::ONE), Fe::ONE);
        assert_eq!(sigma.power(-1, w), sigma.apply(w));
        for a in f.elements() {
            assert_eq!(sigma.power(2, a), a);
        }
        assert!(FrobeniusAut::new(&f, 3).is_err());
        assert!(FrobeniusAut::identity(&f).is_identity());
    }

    #[test]
    fn norm_examples() {
        let f = Field::new(presets::f4());
        let sigma = FrobeniusAut::new(&f, 1).unwrap();
        let w = f.generator();
        assert_eq!(norm(&sigma, 2, w), Fe::ONE);
        for a in f.elements() {
            assert_eq!(norm(&sigma, 0, a), Fe::ONE);
        }
    }

    #[test]
    fn closed_form_norm_matches_recurrence() {
        for (spec, e) in [
            (presets::f16(), 1),
            (presets::f16(), 2),
            (presets::f27(), 1),
            (presets::f2_6(), 2),
        ] {
            let f = Field::new(spec);
            let sigma = FrobeniusAut::new(&f, e).unwrap();
            for a in f.elements() {
                for i in 0..=2 * sigma.order() {
                    assert_eq!(norm(&sigma, i, a), norm_by_recurrence(&sigma, i, a));
                }
            }
        }
    }

    #[test]
    fn top_norm_is_field_norm() {
        // N_m(a) equals the product of all conjugates a^(q^j), j < m.
        let f = Field::new(presets::f2_6());
        for e in [1, 2, 3] {
            let sigma = FrobeniusAut::new(&f, e).unwrap();
            for a in f.elements() {
                let mut prod = Fe::ONE;
                let mut c = a;
                for _ in 0..sigma.order() {
                    prod = f.mul(prod, c);
                    for _ in 0..e {
                        c = f.mul(c, c);
                    }
                }
                assert_eq!(norm(&sigma, sigma.order(), a), prod);
                assert!(sigma.is_fixed(prod));
            }
        }
    }

    #[test]
    fn conjugacy_classes_f4_f9() {
        let f4 = Field::new(presets::f4());
        let s4 = FrobeniusAut::new(&f4, 1).unwrap();
        let nonzero: Vec<Fe> = f4.nonzero_elements().collect();
        assert_eq!(conjugacy_class(&s4, Fe::ONE), nonzero);
        assert_eq!(conjugacy_class(&s4, Fe::ZERO), vec![Fe::ZERO]);

        let f9 = Field::new(presets::f9());
        let s9 = FrobeniusAut::new(&f9, 1).unwrap();
        let squares: Vec<Fe> = {
            let mut v: Vec<Fe> = f9.nonzero_elements().map(|c| f9.mul(c, c)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        assert_eq!(conjugacy_class(&s9, Fe::ONE), squares);
        let non_square = f9
            .nonzero_elements()
            .find(|a| !squares.contains(a))
            .unwrap();
        let other = conjugacy_class(&s9, non_square);
        assert_eq!(other.len(), 4);
        assert!(other.iter().all(|a| !squares.contains(a)));
    }
}
