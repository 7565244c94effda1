//! Named defining polynomials. Every preset is primitive, so elements print
//! as powers `a^k` of the residue class of the variable.

use super::{Field, FieldEmbedding, FieldSpec};

fn spec(p: u32, modpoly: &[u32]) -> FieldSpec {
    FieldSpec::new(p, modpoly.to_vec(), true).expect("preset defining polynomial is primitive")
}

pub fn f2() -> FieldSpec {
    spec(2, &[1, 1])
}

pub fn f3() -> FieldSpec {
    spec(3, &[1, 1])
}

/// `ω² = ω + 1`.
pub fn f4() -> FieldSpec {
    spec(2, &[1, 1, 1])
}

/// `α³ = α + 1`.
pub fn f8() -> FieldSpec {
    spec(2, &[1, 1, 0, 1])
}

/// `ξ² = 2ξ + 1`, i.e. `x² + x + 2`.
pub fn f9() -> FieldSpec {
    spec(3, &[2, 1, 1])
}

/// `γ⁴ = γ + 1`.
pub fn f16() -> FieldSpec {
    spec(2, &[1, 1, 0, 0, 1])
}

/// `β³ + 2β + 1 = 0`.
pub fn f27() -> FieldSpec {
    spec(3, &[1, 2, 0, 1])
}

/// Minimal polynomial of `α^65` for the generator `α` of [`f2_12`], so the
/// designated generator of `F_{2^6}` is `γ = α^65` under [`f2_6_in_f2_12`].
pub fn f2_6() -> FieldSpec {
    spec(2, &[1, 1, 0, 1, 1, 0, 1])
}

/// `x^12 + x^7 + x^6 + x^5 + x^3 + x + 1`.
pub fn f2_12() -> FieldSpec {
    spec(2, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1])
}

/// Exponent `k` such that the generator of [`f2_6`] maps to `α^k` in [`f2_12`].
pub const F2_6_IN_F2_12_POWER: i64 = 65;

/// `F_{2^6} ↪ F_{2^12}` sending the generator to `α^65`.
pub fn f2_6_in_f2_12() -> FieldEmbedding {
    let k = Field::new(f2_6());
    let l = Field::new(f2_12());
    let gamma = l.pow(l.generator(), F2_6_IN_F2_12_POWER);
    FieldEmbedding::with_image(&k, &l, gamma)
        .expect("α^65 is a root of the F_2^6 preset polynomial")
}

pub fn by_name(name: &str) -> Option<FieldSpec> {
    Some(match name {
        "F2" => f2(),
        "F3" => f3(),
        "F4" => f4(),
        "F8" => f8(),
        "F9" => f9(),
        "F16" => f16(),
        "F27" => f27(),
        "F2_6" | "F64" => f2_6(),
        "F2_12" | "F4096" => f2_12(),
        _ => return None,
    })
}

pub const NAMES: &[&str] = &["F2", "F3", "F4", "F8", "F9", "F16", "F27", "F2_6", "F2_12"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_construct() {
        for name in NAMES {
            let s = by_name(name).unwrap();
            assert!(s.is_primitive());
        }
        assert!(by_name("F5").is_none());
    }
}
