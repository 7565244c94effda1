//! Exact arithmetic in explicit finite fields `F_{p^d}`.
//!
//! Elements are coefficient vectors over the prime field, packed into a
//! [`Fe`] as the base-`p` integer `c0 + c1 p + ... + c_{d-1} p^{d-1}`. A
//! [`Field`] is a cheap, shareable handle that performs all arithmetic; for
//! fields with at most 2^16 elements it lazily builds exp/log tables.

mod aut;
mod config;
mod embed;
pub mod presets;
mod primefield;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

pub use aut::{
    bracket, conjugacy_class, conjugate, norm, norm_by_recurrence, FieldAut, FrobeniusAut,
};
pub use config::{parse_key_values, FieldConfig};
pub use embed::FieldEmbedding;

/// Fields up to this size get exp/log tables.
pub const LOG_TABLE_LIMIT: u32 = 1 << 16;
/// Largest field the library will construct.
pub const MAX_FIELD_SIZE: u64 = 1 << 24;

/// A field element in packed coefficient form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Characteristic, degree and defining polynomial of `F_{p^d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    d: u32,
    modpoly: Vec<u32>,
    primitive: bool,
}

impl FieldSpec {
    /// `modpoly` lists the coefficients of the monic defining polynomial in
    /// ascending order (length `d + 1`).
    pub fn new(p: u32, modpoly: Vec<u32>, primitive: bool) -> Result<Self> {
        if !primefield::is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if modpoly.len() < 2 {
            return Err(Error::InvalidField(
                "defining polynomial must have degree >= 1".into(),
            ));
        }
        if modpoly.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!(
                "coefficients must lie in [0, {p})"
            )));
        }
        if *modpoly.last().unwrap() != 1 {
            return Err(Error::InvalidField(
                "defining polynomial must be monic".into(),
            ));
        }
        let d = (modpoly.len() - 1) as u32;
        let size = (p as u64).checked_pow(d).filter(|&s| s <= MAX_FIELD_SIZE);
        if size.is_none() {
            return Err(Error::InvalidField(format!(
                "{p}^{d} exceeds the supported field size"
            )));
        }
        if !primefield::is_irreducible(&modpoly, p) {
            return Err(Error::InvalidField(
                "defining polynomial is reducible".into(),
            ));
        }
        let spec = FieldSpec {
            p,
            d,
            modpoly,
            primitive,
        };
        if primitive && !primefield::generator_is_primitive(&spec.modpoly, p) {
            return Err(Error::InvalidField(
                "residue class of the variable is not a multiplicative generator".into(),
            ));
        }
        Ok(spec)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn modpoly(&self) -> &[u32] {
        &self.modpoly
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    pub fn size(&self) -> u32 {
        self.p.pow(self.d)
    }
}

struct Tables {
    generator: Fe,
    // exp has length 2(N-1) so that exp[log a + log b] needs no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    spec: FieldSpec,
    size: u32,
    tables: OnceLock<Option<Tables>>,
}

/// Shared handle to a finite field. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}^{}{:?}",
            self.p(),
            self.degree(),
            self.0.spec.modpoly
        )
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(spec: FieldSpec) -> Self {
        let size = spec.size();
        Field(Arc::new(Inner {
            spec,
            size,
            tables: OnceLock::new(),
        }))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.spec.d
    }

    #[inline]
    pub fn size(&self) -> u32 {
        self.0.size
    }

    /// Order of the multiplicative group.
    #[inline]
    pub fn order(&self) -> u32 {
        self.0.size - 1
    }

    /// Element from its packed value.
    pub fn elem(&self, value: u32) -> Result<Fe> {
        if value < self.0.size {
            Ok(Fe(value))
        } else {
            Err(Error::MismatchedField)
        }
    }

    pub fn contains(&self, a: Fe) -> bool {
        a.0 < self.0.size
    }

    /// Element from ascending coefficients over `F_p`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        let p = self.p();
        if coeffs.len() > self.degree() as usize || coeffs.iter().any(|&c| c >= p) {
            return Err(Error::InvalidArgument(format!(
                "coefficient tuple {coeffs:?} does not describe an element of F_{}^{}",
                p,
                self.degree()
            )));
        }
        let mut v = 0u32;
        for &c in coeffs.iter().rev() {
            v = v * p + c;
        }
        Ok(Fe(v))
    }

    /// Ascending coefficients over `F_p`, always of length `d`.
    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        let p = self.p();
        let mut v = a.0;
        (0..self.degree())
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    /// Embedding of the integer `n` via the prime field.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p() as i64) as u32)
    }

    /// Residue class of the variable of the defining polynomial.
    pub fn generator(&self) -> Fe {
        let spec = &self.0.spec;
        if spec.d == 1 {
            // x ≡ -c0 for a linear modulus x + c0
            Fe((spec.p - spec.modpoly[0]) % spec.p)
        } else {
            Fe(spec.p)
        }
    }

    /// All elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.0.size).map(Fe)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.0.size).map(Fe)
    }

    fn tables(&self) -> Option<&Tables> {
        self.0
            .tables
            .get_or_init(|| (self.0.size <= LOG_TABLE_LIMIT).then(|| self.build_tables()))
            .as_ref()
    }

    fn build_tables(&self) -> Tables {
        let n = self.0.size as usize;
        let generator = self.find_primitive_slow();
        let order = n - 1;
        let mut exp = vec![0u32; 2 * order.max(1)];
        let mut log = vec![0u32; n];
        let mut cur = Fe::ONE;
        for (i, slot) in exp.iter_mut().take(order).enumerate() {
            *slot = cur.0;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_slow(cur, generator);
        }
        for i in order..exp.len() {
            exp[i] = exp[i - order];
        }
        Tables {
            generator,
            exp,
            log,
        }
    }

    fn find_primitive_slow(&self) -> Fe {
        if self.0.spec.primitive {
            return self.generator();
        }
        let order = self.order() as u64;
        let factors = primefield::prime_factors(order);
        self.nonzero_elements()
            .find(|&a| {
                factors
                    .iter()
                    .all(|&r| self.pow_slow(a, order / r) != Fe::ONE)
            })
            .expect("every finite field has a primitive element")
    }

    /// A fixed multiplicative generator: the designated one when the spec is
    /// primitive, otherwise the least primitive element in packed order.
    pub fn primitive_element(&self) -> Fe {
        match self.tables() {
            Some(t) => t.generator,
            None => self.find_primitive_slow(),
        }
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p();
        if p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x != 0 || y != 0 {
            let c = (x % p + y % p) % p;
            out += c * place;
            place *= p;
            x /= p;
            y /= p;
        }
        Fe(out)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.p();
        if p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x != 0 {
            out += ((p - x % p) % p) * place;
            place *= p;
            x /= p;
        }
        Fe(out)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        match self.tables() {
            Some(t) => Fe(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_slow(a, b),
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, -1))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k`; negative `k` inverts first. `0^0 = 1`, and `0^k` for `k < 0` is
    /// reported as zero (callers that care use [`Field::inv`]).
    pub fn pow(&self, a: Fe, k: i64) -> Fe {
        if k == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let order = self.order() as i64;
        let e = k.rem_euclid(order) as u64;
        match self.tables() {
            Some(t) => {
                let l = (t.log[a.0 as usize] as u64 * e) % order as u64;
                Fe(t.exp[l as usize])
            }
            None => self.pow_slow(a, e),
        }
    }

    /// `a^e` for a (possibly huge) non-negative exponent.
    pub fn pow_u128(&self, a: Fe, e: u128) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let r = (e % self.order() as u128) as i64;
        self.pow(a, r)
    }

    /// Discrete logarithm to the base [`Field::primitive_element`].
    pub fn log(&self, a: Fe) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        match self.tables() {
            Some(t) => Some(t.log[a.0 as usize]),
            None => {
                let g = self.primitive_element();
                let mut cur = Fe::ONE;
                for i in 0..self.order() {
                    if cur == a {
                        return Some(i);
                    }
                    cur = self.mul_slow(cur, g);
                }
                None
            }
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Fe) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let order = self.order() as u64;
        let mut o = order;
        for r in primefield::prime_factors(order) {
            while o.is_multiple_of(r) && self.pow(a, (o / r) as i64) == Fe::ONE {
                o /= r;
            }
        }
        Some(o)
    }

    /// `a^(p^k)`, the `k`-th power of the absolute Frobenius.
    pub fn frobenius(&self, a: Fe, k: i64) -> Fe {
        let d = self.degree() as i64;
        let k = k.rem_euclid(d) as u32;
        if k == 0 || a.is_zero() {
            return a;
        }
        let order = self.order() as u64;
        let mut e = 1u64;
        for _ in 0..k {
            e = e * self.p() as u64 % order;
        }
        self.pow(a, e as i64)
    }

    pub fn sum<I: IntoIterator<Item = Fe>>(&self, it: I) -> Fe {
        it.into_iter().fold(Fe::ZERO, |acc, x| self.add(acc, x))
    }

    pub fn product<I: IntoIterator<Item = Fe>>(&self, it: I) -> Fe {
        it.into_iter().fold(Fe::ONE, |acc, x| self.mul(acc, x))
    }

    /// Schoolbook multiplication modulo the defining polynomial; the
    /// reference path the tables are built from.
    pub(crate) fn mul_slow(&self, a: Fe, b: Fe) -> Fe {
        let spec = &self.0.spec;
        let p = spec.p;
        let d = spec.d as usize;
        if p == 2 {
            let (mut x, mut y, mut r) = (a.0 as u64, b.0 as u64, 0u64);
            let m: u64 = spec
                .modpoly
                .iter()
                .enumerate()
                .map(|(i, &c)| (c as u64) << i)
                .sum();
            while y != 0 {
                if y & 1 == 1 {
                    r ^= x;
                }
                y >>= 1;
                x <<= 1;
                if (x >> d) & 1 == 1 {
                    x ^= m;
                }
            }
            return Fe(r as u32);
        }
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, &m) in spec.modpoly.iter().enumerate().take(d) {
                let idx = k - d + i;
                prod[idx] = (prod[idx] + (p as u64 - c) * m as u64) % p as u64;
            }
            prod[k] = 0;
        }
        let coeffs: Vec<u32> = prod[..d].iter().map(|&c| c as u32).collect();
        self.from_coeffs(&coeffs)
            .expect("reduced product is a field element")
    }

    pub(crate) fn pow_slow(&self, mut a: Fe, mut e: u64) -> Fe {
        let mut r = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_slow(r, a);
            }
            a = self.mul_slow(a, a);
            e >>= 1;
        }
        r
    }

    /// Human form: `a^k` powers of the designated generator when the spec is
    /// primitive, otherwise a coefficient tuple.
    pub fn format(&self, a: Fe) -> String {
        if a.is_zero() {
            return "0".into();
        }
        if a == Fe::ONE {
            return "1".into();
        }
        if self.0.spec.primitive && self.0.size <= LOG_TABLE_LIMIT {
            return match self.log(a) {
                Some(1) => "a".into(),
                Some(k) => format!("a^{k}"),
                None => unreachable!(),
            };
        }
        self.format_tuple(a)
    }

    /// Coefficient tuple form `(c0,c1,...)`.
    pub fn format_tuple(&self, a: Fe) -> String {
        let cs: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
        format!("({})", cs.join(","))
    }

    /// Parses `0`, `1`, an integer, `a`, `a^k` (k may be negative) or a
    /// coefficient tuple with or without parentheses.
    pub fn parse_elem(&self, s: &str) -> Result<Fe> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad field element `{s}`"));
        if s == "a" {
            return Ok(self.generator());
        }
        if let Some(k) = s.strip_prefix("a^") {
            let k: i64 = k.trim().parse().map_err(|_| bad())?;
            return Ok(self.pow(self.generator(), k));
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if inner.contains(',') || s.starts_with('(') {
            let cs = inner
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            return self.from_coeffs(&cs).map_err(|_| bad());
        }
        let n: i64 = s.parse().map_err(|_| bad())?;
        Ok(self.from_int(n))
    }
}

#[cfg(test)]
mod tests {
    use super::presets;
    use super::*;

    #[test]
    fn f4_omega_squared() {
        let f = Field::new(presets::f4());
        let w = f.generator();
        assert_eq!(f.mul(w, w), f.add(w, Fe::ONE));
    }

    #[test]
    fn identity_and_inverse() {
        for spec in [presets::f8(), presets::f9(), presets::f27()] {
            let f = Field::new(spec);
            for a in f.elements() {
                assert_eq!(f.mul(a, Fe::ONE), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                }
            }
            assert_eq!(f.inv(Fe::ZERO), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn f8_alpha_cubed_matches_reduction_table() {
        // Multiplication table built by repeated shift-and-reduce by x^3 = x + 1.
        let f = Field::new(presets::f8());
        let alpha = f.generator();
        let mut shift = [0u32; 8];
        let mut cur = 1u32;
        for slot in shift.iter_mut() {
            *slot = cur;
            cur <<= 1;
            if cur & 0b1000 != 0 {
                cur ^= 0b1011;
            }
        }
        assert_eq!(f.pow(alpha, 3).value(), shift[3]);
        assert_eq!(f.pow(alpha, 3), f.add(alpha, Fe::ONE));
        for (k, &v) in shift.iter().enumerate().take(7) {
            assert_eq!(f.pow(alpha, k as i64).value(), v);
        }
    }

    #[test]
    fn table_and_slow_paths_agree() {
        for spec in [presets::f16(), presets::f27(), presets::f2_6()] {
            let f = Field::new(spec);
            for a in f.elements() {
                for b in f.elements().step_by(3) {
                    assert_eq!(f.mul(a, b), f.mul_slow(a, b));
                }
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        let spec = FieldSpec::new(
            2,
            vec![1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
            true,
        )
        .unwrap();
        let f = Field::new(spec);
        assert!(f.size() > LOG_TABLE_LIMIT);
        let a = f.generator();
        assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
        assert_eq!(f.pow(a, f.order() as i64), Fe::ONE);
        assert_eq!(f.element_order(a), Some(f.order() as u64));
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(FieldSpec::new(2, vec![1, 0, 1], false).is_err());
        assert!(FieldSpec::new(4, vec![1, 1], false).is_err());
        // x^4+x^3+x^2+x+1 is irreducible but x has order 5
        assert!(FieldSpec::new(2, vec![1, 1, 1, 1, 1], true).is_err());
        assert!(FieldSpec::new(2, vec![1, 1, 1, 1, 1], false).is_ok());
    }

    #[test]
    fn parse_and_format_roundtrip() {
        let f = Field::new(presets::f27());
        for a in f.elements() {
            assert_eq!(f.parse_elem(&f.format(a)).unwrap(), a);
            assert_eq!(f.parse_elem(&f.format_tuple(a)).unwrap(), a);
        }
        assert_eq!(f.parse_elem("2").unwrap(), f.neg(Fe::ONE));
        assert!(f.parse_elem("b^2").is_err());
    }

    #[test]
    fn frobenius_is_field_automorphism() {
        let f = Field::new(presets::f9());
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(
                    f.frobenius(f.mul(a, b), 1),
                    f.mul(f.frobenius(a, 1), f.frobenius(b, 1))
                );
                assert_eq!(
                    f.frobenius(f.add(a, b), 1),
                    f.add(f.frobenius(a, 1), f.frobenius(b, 1))
                );
            }
            assert_eq!(f.frobenius(a, 2), a);
        }
    }
}
