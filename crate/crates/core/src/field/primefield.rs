//! Dense polynomial helpers over `F_p`, used only while validating a
//! [`FieldSpec`](super::FieldSpec).

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u32;
    while (i as u64) * (i as u64) <= n as u64 {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut r = 2u64;
    while r * r <= n {
        if n.is_multiple_of(r) {
            out.push(r);
            while n.is_multiple_of(r) {
                n /= r;
            }
        }
        r += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2)
    let (mut base, mut e, mut r) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Remainder of `a` modulo `b` over `F_p`; `b` must be nonzero and trimmed.
fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p) as u64;
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k] as u64 * lead_inv % p as u64;
        for (i, &bc) in b.iter().enumerate() {
            let idx = k - db + i;
            r[idx] = ((r[idx] as u64 + (p as u64 - c) * bc as u64) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    rem(&prod, m, p)
}

/// Irreducibility by trial division against every monic polynomial of degree
/// at most `d/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    for deg in 1..=d / 2 {
        let count = (p as u64).pow(deg as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut v = idx;
            for _ in 0..deg {
                g.push((v % p as u64) as u32);
                v /= p as u64;
            }
            g.push(1);
            if rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Whether `x` has multiplicative order `p^d - 1` modulo `f`.
pub(crate) fn generator_is_primitive(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    let order = (p as u64).pow(d as u32) - 1;
    let x: Vec<u32> = if d == 1 {
        vec![(p - f[0]) % p]
    } else {
        vec![0, 1]
    };
    let powmod = |e: u64| {
        let mut base = x.clone();
        let mut r = vec![1u32];
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(&r, &base, f, p);
            }
            base = mulmod(&base, &base, f, p);
            e >>= 1;
        }
        r
    };
    if powmod(order) != vec![1] {
        return false;
    }
    prime_factors(order)
        .into_iter()
        .all(|r| powmod(order / r) != vec![1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_factors(4095), vec![3, 5, 7, 13]);
    }

    #[test]
    fn irreducible_small() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 2, 0, 1], 3));
        assert!(!is_irreducible(&[0, 0, 1], 3));
    }
}
