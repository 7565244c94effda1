//! Left and right Euclidean division, gcrd/gcld with Bezout data, lclm/lcrm.

use super::{SkewPoly, SkewRing};
use crate::error::{Error, Result};
use crate::field::Fe;

/// `gcd = u f1 + v f2` (right version) or `gcd = f1 u + f2 v` (left version).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bezout {
    pub gcd: SkewPoly,
    pub u: SkewPoly,
    pub v: SkewPoly,
}

struct Euclid {
    gcd: SkewPoly,
    u: SkewPoly,
    v: SkewPoly,
    // multipliers of the first vanishing remainder
    u_next: SkewPoly,
}

impl SkewPoly {
    /// `f = s g + r` with `deg r < deg g`.
    pub fn right_div_rem(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.check_ring(g)?;
        let l = g.deg().ok_or(Error::DivisionByZero)?;
        let ring = &self.ring;
        let f = ring.field();
        let Some(n) = self.deg().filter(|&n| n >= l) else {
            return Ok((ring.zero(), self.clone()));
        };
        let gl_inv = f.inv(g.c[l])?;
        let mut r = self.c.clone();
        let mut s = vec![Fe::ZERO; n - l + 1];
        let mut twisted_g = g.c.clone();
        let mut twisted_inv = gl_inv;
        // walk k downwards; twisted_* hold σ^{k-l} of g and g_l^{-1}
        let mut cur = 0usize;
        let set_twist = |tg: &mut Vec<Fe>, ti: &mut Fe, cur: &mut usize, want: usize| {
            if *cur != want {
                let j = want as i64;
                for (dst, &src) in tg.iter_mut().zip(&g.c) {
                    *dst = ring.sigma_pow(j, src);
                }
                *ti = ring.sigma_pow(j, gl_inv);
                *cur = want;
            }
        };
        for k in (l..=n).rev() {
            let rk = r[k];
            if rk.is_zero() {
                continue;
            }
            let sh = k - l;
            set_twist(&mut twisted_g, &mut twisted_inv, &mut cur, sh);
            let t = f.mul(rk, twisted_inv);
            s[sh] = t;
            for (j, &gj) in twisted_g.iter().enumerate() {
                r[sh + j] = f.sub(r[sh + j], f.mul(t, gj));
            }
        }
        r.truncate(l);
        Ok((SkewPoly::from_raw(ring, s), SkewPoly::from_raw(ring, r)))
    }

    /// `f = g s + r` with `deg r < deg g`.
    pub fn left_div_rem(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.check_ring(g)?;
        let l = g.deg().ok_or(Error::DivisionByZero)?;
        let ring = &self.ring;
        let f = ring.field();
        let Some(n) = self.deg().filter(|&n| n >= l) else {
            return Ok((ring.zero(), self.clone()));
        };
        let gl_inv = f.inv(g.c[l])?;
        let mut r = self.c.clone();
        let mut s = vec![Fe::ZERO; n - l + 1];
        for k in (l..=n).rev() {
            let rk = r[k];
            if rk.is_zero() {
                continue;
            }
            let sh = k - l;
            let c = ring.sigma_pow(-(l as i64), f.mul(gl_inv, rk));
            s[sh] = c;
            // g · c x^sh has coefficient g_j σ^j(c) at j + sh
            let mut sc = c;
            for (j, &gj) in g.c.iter().enumerate() {
                r[sh + j] = f.sub(r[sh + j], f.mul(gj, sc));
                sc = ring.sigma(sc);
            }
        }
        r.truncate(l);
        Ok((SkewPoly::from_raw(ring, s), SkewPoly::from_raw(ring, r)))
    }

    pub fn right_rem(&self, g: &SkewPoly) -> Result<SkewPoly> {
        Ok(self.right_div_rem(g)?.1)
    }

    /// `g |_r f`, i.e. `f = h g` for some `h`.
    pub fn is_right_divisible_by(&self, g: &SkewPoly) -> Result<bool> {
        Ok(self.right_div_rem(g)?.1.is_zero())
    }

    /// `g |_l f`, i.e. `f = g h` for some `h`.
    pub fn is_left_divisible_by(&self, g: &SkewPoly) -> Result<bool> {
        Ok(self.left_div_rem(g)?.1.is_zero())
    }

    fn right_euclid(f1: &SkewPoly, f2: &SkewPoly) -> Result<Euclid> {
        f1.check_ring(f2)?;
        if f1.is_zero() && f2.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let ring = &f1.ring;
        let (mut r0, mut r1) = (f1.clone(), f2.clone());
        let (mut u0, mut u1) = (ring.one(), ring.zero());
        let (mut v0, mut v1) = (ring.zero(), ring.one());
        while !r1.is_zero() {
            let (q, r2) = r0.right_div_rem(&r1)?;
            let u2 = &u0 - &(&q * &u1);
            let v2 = &v0 - &(&q * &v1);
            (r0, r1) = (r1, r2);
            (u0, u1) = (u1, u2);
            (v0, v1) = (v1, v2);
        }
        let c = ring.field().inv(r0.leading().expect("gcd is nonzero"))?;
        Ok(Euclid {
            gcd: r0.scale_left(c),
            u: u0.scale_left(c),
            v: v0.scale_left(c),
            u_next: u1,
        })
    }

    fn left_euclid(f1: &SkewPoly, f2: &SkewPoly) -> Result<Euclid> {
        f1.check_ring(f2)?;
        if f1.is_zero() && f2.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let ring = &f1.ring;
        let (mut r0, mut r1) = (f1.clone(), f2.clone());
        let (mut u0, mut u1) = (ring.one(), ring.zero());
        let (mut v0, mut v1) = (ring.zero(), ring.one());
        while !r1.is_zero() {
            let (q, r2) = r0.left_div_rem(&r1)?;
            let u2 = &u0 - &(&u1 * &q);
            let v2 = &v0 - &(&v1 * &q);
            (r0, r1) = (r1, r2);
            (u0, u1) = (u1, u2);
            (v0, v1) = (v1, v2);
        }
        let n = r0.deg().expect("gcd is nonzero") as i64;
        let c = ring.sigma_pow(-n, ring.field().inv(r0.leading().unwrap())?);
        Ok(Euclid {
            gcd: r0.scale_right(c),
            u: u0.scale_right(c),
            v: v0.scale_right(c),
            u_next: u1,
        })
    }

    /// Monic `d = gcrd(f1, f2)` with `d = u f1 + v f2`.
    pub fn gcrd_bezout(&self, other: &SkewPoly) -> Result<Bezout> {
        let e = Self::right_euclid(self, other)?;
        Ok(Bezout {
            gcd: e.gcd,
            u: e.u,
            v: e.v,
        })
    }

    pub fn gcrd(&self, other: &SkewPoly) -> Result<SkewPoly> {
        Ok(Self::right_euclid(self, other)?.gcd)
    }

    /// Right-monic `d = gcld(f1, f2)` with `d = f1 u + f2 v`.
    pub fn gcld_bezout(&self, other: &SkewPoly) -> Result<Bezout> {
        let e = Self::left_euclid(self, other)?;
        Ok(Bezout {
            gcd: e.gcd,
            u: e.u,
            v: e.v,
        })
    }

    pub fn gcld(&self, other: &SkewPoly) -> Result<SkewPoly> {
        Ok(Self::left_euclid(self, other)?.gcd)
    }

    /// Monic least common left multiple, read off the extended Euclidean
    /// co-sequence: `lclm = monic(u_{N+1} f1)`.
    pub fn lclm(&self, other: &SkewPoly) -> Result<SkewPoly> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let e = Self::right_euclid(self, other)?;
        (&e.u_next * self).monic()
    }

    /// Right-monic least common right multiple `f1 u_{N+1}`.
    pub fn lcrm(&self, other: &SkewPoly) -> Result<SkewPoly> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let e = Self::left_euclid(self, other)?;
        (self * &e.u_next).monic_right()
    }
}

impl SkewRing {
    /// `lclm(f_1, ..., f_r)`, folded left to right.
    pub fn lclm_all<'a, I>(&self, polys: I) -> Result<SkewPoly>
    where
        I: IntoIterator<Item = &'a SkewPoly>,
    {
        let mut it = polys.into_iter();
        let first = it.next().ok_or(Error::EmptySet)?;
        let mut acc = first.monic()?;
        for p in it {
            acc = acc.lclm(p)?;
        }
        Ok(acc)
    }
}
