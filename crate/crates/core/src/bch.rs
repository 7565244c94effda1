//! Designed-distance constructions: skew-BCH codes of the first and second
//! kind, skew-RS codes and skew evaluation codes.

use crate::codes::{LinearCode, Modulus, SkewCyclicCode};
use crate::error::{Error, Result};
use crate::field::{norm, Fe, FieldEmbedding, FrobeniusAut};
use crate::linearized::moore_matrix;
use crate::matrix::Matrix;
use crate::roots::{relative_orbit, sigma_minpoly_of_set, skew_vandermonde, AlgebraicSet};
use crate::skew::{SkewPoly, SkewRing};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `{b + t_1 i + t_2 j : 0 ≤ i ≤ δ-2, 0 ≤ j ≤ ν}`, sorted.
fn exponent_set(b: u64, t1: u64, t2: u64, delta: u64, nu: u64) -> Vec<u64> {
    let mut t: Vec<u64> = (0..=delta - 2)
        .flat_map(|i| (0..=nu).map(move |j| b + t1 * i + t2 * j))
        .collect();
    t.sort_unstable();
    t.dedup();
    t
}

fn check_design(delta: u64, t1: u64, t2: u64) -> Result<()> {
    if delta < 2 {
        return Err(Error::ConditionViolated(format!(
            "designed distance delta = {delta} must be >= 2"
        )));
    }
    if t1 == 0 || t2 == 0 {
        return Err(Error::ConditionViolated(
            "t1 and t2 must be positive".into(),
        ));
    }
    Ok(())
}

/// Smallest `i ≥ 1` with `a^⟨i⟩ = 1`, or `None` if there is none. Codes of
/// the first kind built from `a` have length at most this `i`.
pub fn max_admissible_length(aut: &FrobeniusAut, a: Fe) -> Option<u64> {
    let f = aut.field();
    if a.is_zero() {
        return None;
    }
    // ⟨i⟩ mod ord(a) is eventually periodic with period ≤ ord(a)
    let bound = 2 * f.element_order(a)? + 2;
    let (mut acc, mut s) = (Fe::ONE, a);
    for i in 1..=bound {
        acc = f.mul(acc, s);
        if acc == Fe::ONE {
            return Some(i);
        }
        s = aut.apply(s);
    }
    None
}

/// Whether `a^⟨0⟩, ..., a^⟨n-1⟩` are pairwise distinct.
pub fn distinct_norms(aut: &FrobeniusAut, a: Fe, n: usize) -> bool {
    let mut v: Vec<Fe> = (0..n as u32).map(|i| norm(aut, i, a)).collect();
    v.sort_unstable();
    v.dedup();
    v.len() == n
}

/// Monic left multiple of `g` of degree `n`: `x^n - a` for the first `a` in
/// `1, then F*` that works, else `x^{n - deg g} g`.
pub fn default_modulus(g: &SkewPoly, n: usize) -> Result<SkewPoly> {
    let ring = g.ring();
    let r = g.deg().ok_or(Error::ZeroPolynomial)?;
    if r > n {
        return Err(Error::ConditionViolated(format!(
            "generator degree {r} exceeds length {n}"
        )));
    }
    let field = ring.field();
    for a in std::iter::once(Fe::ONE).chain(field.nonzero_elements().filter(|&a| a != Fe::ONE)) {
        let f = ring.x_n_minus(n, a);
        if f.is_right_divisible_by(g)? {
            return Ok(f);
        }
    }
    Ok(g.left_shift(n - r))
}

/// Parameters of a skew-BCH code of the first kind over `K = F_{q^m}`, with
/// `α` in the extension `L = F_{q^{ms}}` given by `emb`.
#[derive(Clone, Debug)]
pub struct Bch1Spec {
    pub ring: SkewRing,
    pub emb: FieldEmbedding,
    pub alpha: Fe,
    pub b: u64,
    pub t1: u64,
    pub t2: u64,
    pub delta: u64,
    pub nu: u64,
    pub n: usize,
}

/// Result of [`bch1_generator`].
#[derive(Clone, Debug)]
pub struct Bch1Generator {
    pub g: SkewPoly,
    pub designed_distance: u64,
    /// Designed exponents `T`.
    pub exponents: Vec<u64>,
    /// Relative-automorphism orbit `A` of `{α^t : t ∈ T}` in `L`.
    pub roots: AlgebraicSet,
}

impl Bch1Spec {
    /// Ring over `L` with `σ` extended as the same `q`-Frobenius.
    pub fn big_ring(&self) -> Result<SkewRing> {
        self.ring.extend(&self.emb)
    }

    /// Checks `(α^{t_l})^⟨i⟩ ≠ 1` for `i = 1..n-1` (the `t_2` condition only
    /// when `ν > 0`).
    pub fn check(&self) -> Result<()> {
        check_design(self.delta, self.t1, self.t2)?;
        if self.n == 0 {
            return Err(Error::ConditionViolated("length must be >= 1".into()));
        }
        if self.ring.field() != self.emb.source() {
            return Err(Error::MismatchedField);
        }
        let l = self.emb.target();
        if !l.contains(self.alpha) || self.alpha.is_zero() {
            return Err(Error::ConditionViolated(
                "alpha must be a nonzero element of the extension".into(),
            ));
        }
        let big = self.big_ring()?;
        let ts: Vec<(u64, &str)> = if self.nu == 0 {
            vec![(self.t1, "t1")]
        } else {
            vec![(self.t1, "t1"), (self.t2, "t2")]
        };
        for (t, name) in ts {
            let at = l.pow(self.alpha, t as i64);
            if let Some(i) = (1..self.n as u32).find(|&i| norm(big.aut(), i, at) == Fe::ONE) {
                return Err(Error::ConditionViolated(format!(
                    "(alpha^{name})^<{i}> = 1 with i < n = {}",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// `g = m_A` restricted to `K`, with `A` the orbit of the designed roots.
pub fn bch1_generator(spec: &Bch1Spec) -> Result<Bch1Generator> {
    spec.check()?;
    let l = spec.emb.target();
    let big = spec.big_ring()?;
    if spec.nu == 0 && spec.t1 == 1 {
        assert!(
            distinct_norms(big.aut(), spec.alpha, spec.n),
            "distinctness and the norm condition disagree"
        );
    }
    let exponents = exponent_set(spec.b, spec.t1, spec.t2, spec.delta, spec.nu);
    let points: Vec<Fe> = exponents
        .iter()
        .map(|&t| l.pow(spec.alpha, t as i64))
        .collect();
    let g = sigma_minpoly_of_set(&points, &spec.emb, &spec.ring)?;
    if g.deg().unwrap() > spec.n {
        return Err(Error::ConditionViolated(format!(
            "generator degree {} exceeds n = {}",
            g.deg().unwrap(),
            spec.n
        )));
    }
    let roots = relative_orbit(&spec.emb, &points)?;
    Ok(Bch1Generator {
        g,
        designed_distance: spec.delta + spec.nu,
        exponents,
        roots,
    })
}

/// A code together with the modulus chosen for it.
#[derive(Clone, Debug)]
pub struct DesignedCode {
    pub code: SkewCyclicCode,
    pub designed_distance: u64,
}

/// The first-kind code of length `spec.n`, on [`default_modulus`].
pub fn bch1_code(spec: &Bch1Spec) -> Result<DesignedCode> {
    let gen = bch1_generator(spec)?;
    let f = default_modulus(&gen.g, spec.n)?;
    Ok(DesignedCode {
        code: SkewCyclicCode::new(&Modulus::new(&f)?, &gen.g)?,
        designed_distance: gen.designed_distance,
    })
}

/// Skew-RS code of the first kind: `g' = lclm(x - α^b, ..., x - α^{b+δ-2})`
/// for `α ∈ F`, on the modulus `f` (default [`default_modulus`]).
pub fn skew_rs1(
    ring: &SkewRing,
    alpha: Fe,
    b: u64,
    delta: u64,
    n: usize,
    f: Option<&SkewPoly>,
) -> Result<SkewCyclicCode> {
    check_design(delta, 1, 1)?;
    let field = ring.field();
    if !field.contains(alpha) || alpha.is_zero() {
        return Err(Error::ConditionViolated(
            "alpha must be a nonzero field element".into(),
        ));
    }
    if !distinct_norms(ring.aut(), alpha, n) {
        return Err(Error::ConditionViolated(format!(
            "alpha^<0>, ..., alpha^<{}> are not distinct",
            n - 1
        )));
    }
    if delta as usize - 1 > n {
        return Err(Error::ConditionViolated(format!(
            "delta - 1 = {} exceeds n = {n}",
            delta - 1
        )));
    }
    let lin: Vec<SkewPoly> = (0..delta - 1)
        .map(|i| ring.linear(field.pow(alpha, (b + i) as i64)))
        .collect();
    let g = ring.lclm_all(&lin)?;
    assert_eq!(
        g.deg(),
        Some(delta as usize - 1),
        "skew-RS generator has the wrong degree"
    );
    let modulus = match f {
        Some(f) => {
            if f.deg() != Some(n) {
                return Err(Error::DimensionMismatch(format!(
                    "modulus must have degree {n}"
                )));
            }
            f.clone()
        }
        None => default_modulus(&g, n)?,
    };
    SkewCyclicCode::new(&Modulus::new(&modulus)?, &g)
}

/// First `α^k`, `k = 0, 1, ...`, whose `σ`-orbit is a basis over the fixed
/// field, tested by Moore-matrix invertibility.
pub fn find_normal_element(aut: &FrobeniusAut) -> Result<Fe> {
    let f = aut.field();
    let g = f.generator();
    (0..f.order() as i64)
        .map(|k| f.pow(g, k))
        .find(|&a| is_normal(aut, a))
        .ok_or_else(|| Error::ConditionViolated("no normal element found".into()))
}

/// Whether `a, σ(a), ..., σ^{m-1}(a)` is a basis over the fixed field of `σ`.
pub fn is_normal(aut: &FrobeniusAut, a: Fe) -> bool {
    let m = aut.order() as usize;
    let orbit: Vec<Fe> = (0..m).map(|i| aut.power(i as i64, a)).collect();
    moore_matrix(aut, &orbit, m)
        .map(|s| s.is_invertible())
        .unwrap_or(false)
}

/// Parameters of a skew-BCH code of the second kind: length `n = ms`, `α` a
/// normal element of `L = F_{q^n}` over `F_q`.
#[derive(Clone, Debug)]
pub struct Bch2Spec {
    pub ring: SkewRing,
    pub emb: FieldEmbedding,
    pub alpha: Fe,
    pub b: u64,
    pub t1: u64,
    pub t2: u64,
    pub delta: u64,
    pub nu: u64,
}

/// Result of [`bch2_generator`].
#[derive(Clone, Debug)]
pub struct Bch2Generator {
    pub g: SkewPoly,
    pub designed_distance: u64,
    pub beta: Fe,
    /// `S`, reduced modulo `n` and sorted.
    pub s: Vec<u64>,
    /// Smallest union of cosets of `{0, m, 2m, ...}` containing `S`, sorted.
    pub s_bar: Vec<u64>,
}

impl Bch2Spec {
    pub fn m(&self) -> u64 {
        self.ring.m() as u64
    }

    pub fn s(&self) -> u64 {
        self.emb.relative_degree() as u64
    }

    pub fn n(&self) -> usize {
        (self.m() * self.s()) as usize
    }

    pub fn check(&self) -> Result<()> {
        check_design(self.delta, self.t1, self.t2)?;
        if self.ring.field() != self.emb.source() {
            return Err(Error::MismatchedField);
        }
        let n = self.n() as u64;
        let big = self.ring.extend(&self.emb)?;
        if !self.emb.target().contains(self.alpha) || !is_normal(big.aut(), self.alpha) {
            return Err(Error::ConditionViolated(
                "alpha does not generate a normal basis".into(),
            ));
        }
        if gcd(n, self.t1) != 1 {
            return Err(Error::ConditionViolated(format!(
                "gcd(n, t1) = gcd({n}, {}) != 1",
                self.t1
            )));
        }
        if gcd(n, self.t2) >= self.delta {
            return Err(Error::ConditionViolated(format!(
                "gcd(n, t2) = gcd({n}, {}) is not below delta = {}",
                self.t2, self.delta
            )));
        }
        Ok(())
    }
}

/// `S̄`: all residues mod `n = ms` congruent mod `m` to an element of `S`.
pub fn coset_closure(s: &[u64], m: u64, n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (0..n)
        .filter(|&t| s.iter().any(|&x| (x % n) % m == t % m))
        .collect();
    out.sort_unstable();
    out
}

/// `g' = lclm(x - β^{q^t} : t ∈ S̄)` restricted to `K`, with `β = α^{q-1}`.
pub fn bch2_generator(spec: &Bch2Spec) -> Result<Bch2Generator> {
    spec.check()?;
    let n = spec.n() as u64;
    let big = spec.ring.extend(&spec.emb)?;
    let l = spec.emb.target();
    let q = spec.ring.q();
    let beta = l.pow(spec.alpha, q as i64 - 1);
    let mut s: Vec<u64> = exponent_set(spec.b, spec.t1, spec.t2, spec.delta, spec.nu)
        .into_iter()
        .map(|t| t % n)
        .collect();
    s.sort_unstable();
    s.dedup();
    let s_bar = coset_closure(&s, spec.m(), n);
    let lin: Vec<SkewPoly> = s_bar
        .iter()
        .map(|&t| big.linear(big.sigma_pow(t as i64, beta)))
        .collect();
    let g = big.lclm_all(&lin)?.restrict(&spec.emb, &spec.ring)?;
    assert!(
        spec.ring
            .x_n_minus(n as usize, Fe::ONE)
            .is_right_divisible_by(&g)?,
        "second-kind generator does not divide x^n - 1"
    );
    Ok(Bch2Generator {
        g,
        designed_distance: spec.delta + spec.nu,
        beta,
        s,
        s_bar,
    })
}

/// The second-kind code on `x^n - 1`.
pub fn bch2_code(spec: &Bch2Spec) -> Result<DesignedCode> {
    let gen = bch2_generator(spec)?;
    let modulus = Modulus::constacyclic(&spec.ring, spec.n(), Fe::ONE)?;
    Ok(DesignedCode {
        code: SkewCyclicCode::new(&modulus, &gen.g)?,
        designed_distance: gen.designed_distance,
    })
}

/// `{(p(α_1), ..., p(α_n)) : deg p < k}`.
#[derive(Clone, Debug)]
pub struct EvaluationCode {
    pub points: Vec<Fe>,
    /// Rows `(N_i(α_1), ..., N_i(α_n))` for `i < k`.
    pub generator: Matrix,
    pub code: LinearCode,
}

pub fn evaluation_code(ring: &SkewRing, points: &[Fe], k: usize) -> Result<EvaluationCode> {
    let n = points.len();
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k < n, got k = {k}, n = {n}"
        )));
    }
    if skew_vandermonde(ring, n, points)?.rank() < n {
        return Err(Error::RankDeficientPoints);
    }
    let generator = skew_vandermonde(ring, k, points)?;
    let code = LinearCode::new(&generator);
    assert_eq!(code.k(), k, "evaluation code has the wrong dimension");
    Ok(EvaluationCode {
        points: points.to_vec(),
        generator,
        code,
    })
}

#[cfg(test)]
mod tests;
