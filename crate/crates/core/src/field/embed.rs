use std::collections::HashMap;
use std::sync::Arc;

use super::{Fe, Field, FieldAut};
use crate::error::{Error, Result};

struct Inner {
    source: Field,
    target: Field,
    image: Fe,
    forward: Vec<Fe>,
    backward: HashMap<Fe, Fe>,
}

/// A ring embedding `F_{p^d1} ↪ F_{p^d2}` fixed by the image of the source
/// generator, which must be a root of the source defining polynomial.
#[derive(Clone)]
pub struct FieldEmbedding(Arc<Inner>);

impl std::fmt::Debug for FieldEmbedding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldEmbedding")
            .field("source", &self.0.source)
            .field("target", &self.0.target)
            .field("image", &self.0.image)
            .finish()
    }
}

fn eval_in_target(target: &Field, coeffs: &[u32], x: Fe) -> Fe {
    coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| {
        target.add(target.mul(acc, x), target.from_int(c as i64))
    })
}

impl FieldEmbedding {
    /// Embedding sending the source generator to `image`.
    pub fn with_image(source: &Field, target: &Field, image: Fe) -> Result<Self> {
        if source.p() != target.p() {
            return Err(Error::InvalidEmbedding("characteristics differ".into()));
        }
        if !target.degree().is_multiple_of(source.degree()) {
            return Err(Error::InvalidEmbedding(format!(
                "degree {} does not divide {}",
                source.degree(),
                target.degree()
            )));
        }
        if !target.contains(image) {
            return Err(Error::MismatchedField);
        }
        if !eval_in_target(target, source.spec().modpoly(), image).is_zero() {
            return Err(Error::InvalidEmbedding(
                "image is not a root of the source defining polynomial".into(),
            ));
        }
        let forward: Vec<Fe> = source
            .elements()
            .map(|a| eval_in_target(target, &source.coeffs(a), image))
            .collect();
        let backward = forward
            .iter()
            .enumerate()
            .map(|(i, &b)| (b, Fe(i as u32)))
            .collect();
        Ok(FieldEmbedding(Arc::new(Inner {
            source: source.clone(),
            target: target.clone(),
            image,
            forward,
            backward,
        })))
    }

    /// Canonical embedding: among the roots of the source defining
    /// polynomial in the target, the one with the lexicographically least
    /// ascending coefficient sequence.
    pub fn find(source: &Field, target: &Field) -> Result<Self> {
        if source.p() != target.p() || !target.degree().is_multiple_of(source.degree()) {
            return Err(Error::InvalidEmbedding(format!(
                "F_{}^{} is not a subfield of F_{}^{}",
                source.p(),
                source.degree(),
                target.p(),
                target.degree()
            )));
        }
        let modpoly = source.spec().modpoly();
        let image = target
            .elements()
            .filter(|&x| eval_in_target(target, modpoly, x).is_zero())
            .min_by_key(|&x| target.coeffs(x))
            .ok_or_else(|| Error::InvalidEmbedding("no root found".into()))?;
        Self::with_image(source, target, image)
    }

    pub fn identity(field: &Field) -> Self {
        Self::with_image(field, field, field.generator())
            .expect("generator is a root of its own modulus")
    }

    pub fn source(&self) -> &Field {
        &self.0.source
    }

    pub fn target(&self) -> &Field {
        &self.0.target
    }

    pub fn image(&self) -> Fe {
        self.0.image
    }

    /// Relative degree `s = d2 / d1`.
    pub fn relative_degree(&self) -> u32 {
        self.0.target.degree() / self.0.source.degree()
    }

    pub fn embed(&self, a: Fe) -> Fe {
        self.0.forward[a.0 as usize]
    }

    /// Preimage of `b`, or `None` when `b` is outside the embedded subfield.
    pub fn restrict(&self, b: Fe) -> Option<Fe> {
        self.0.backward.get(&b).copied()
    }

    /// `Aut(target | source) = {a ↦ a^(Q^l) : l < s}` with `Q` the source size.
    pub fn relative_automorphisms(&self) -> Vec<FieldAut> {
        let d1 = self.0.source.degree();
        (0..self.relative_degree())
            .map(|l| FieldAut::new(&self.0.target, d1 * l))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{presets, Field};
    use super::*;

    #[test]
    fn embed_constants() {
        let f4 = Field::new(presets::f4());
        let f16 = Field::new(presets::f16());
        let emb = FieldEmbedding::find(&f4, &f16).unwrap();
        assert_eq!(emb.embed(Fe::ZERO), Fe::ZERO);
        assert_eq!(emb.embed(Fe::ONE), Fe::ONE);
        assert_eq!(emb.restrict(Fe::ONE), Some(Fe::ONE));
    }

    #[test]
    fn embedding_is_injective_homomorphism() {
        let pairs = [
            (presets::f4(), presets::f16()),
            (presets::f8(), presets::f2_6()),
            (presets::f4(), presets::f2_6()),
            (presets::f2_6(), presets::f2_12()),
        ];
        for (s, t) in pairs {
            let (s, t) = (Field::new(s), Field::new(t));
            let emb = FieldEmbedding::find(&s, &t).unwrap();
            let mut images: Vec<Fe> = s.elements().map(|a| emb.embed(a)).collect();
            for a in s.elements() {
                assert_eq!(emb.restrict(emb.embed(a)), Some(a));
                for b in s.elements() {
                    assert_eq!(emb.embed(s.mul(a, b)), t.mul(emb.embed(a), emb.embed(b)));
                    assert_eq!(emb.embed(s.add(a, b)), t.add(emb.embed(a), emb.embed(b)));
                }
            }
            images.sort_unstable();
            images.dedup();
            assert_eq!(images.len(), s.size() as usize);
        }
    }

    #[test]
    fn gamma_is_alpha_65() {
        let k = Field::new(presets::f2_6());
        let l = Field::new(presets::f2_12());
        let gamma = l.pow(l.generator(), presets::F2_6_IN_F2_12_POWER);
        let emb = FieldEmbedding::with_image(&k, &l, gamma).unwrap();
        assert_eq!(emb.embed(k.generator()), gamma);
        assert_eq!(l.element_order(gamma), Some(63));
        // a primitive element of F_2^12 has order 4095, which does not divide 63
        assert_eq!(emb.restrict(l.generator()), None);
    }

    #[test]
    fn rejects_bad_images() {
        let f4 = Field::new(presets::f4());
        let f16 = Field::new(presets::f16());
        let f8 = Field::new(presets::f8());
        assert!(FieldEmbedding::with_image(&f4, &f16, f16.generator()).is_err());
        assert!(FieldEmbedding::find(&f8, &f16).is_err());
        assert!(FieldEmbedding::find(&Field::new(presets::f9()), &f16).is_err());
    }

    #[test]
    fn relative_automorphisms_fix_subfield() {
        let k = Field::new(presets::f2_6());
        let l = Field::new(presets::f2_12());
        let emb = FieldEmbedding::find(&k, &l).unwrap();
        let auts = emb.relative_automorphisms();
        assert_eq!(auts.len(), 2);
        assert!(auts[0].is_identity());
        assert_eq!(auts[1].p_power(), 6);
        for a in k.elements() {
            for tau in &auts {
                assert_eq!(tau.apply(emb.embed(a)), emb.embed(a));
            }
        }
        let alpha = l.generator();
        assert_eq!(auts[1].apply(alpha), l.pow(alpha, 64));

        let id = FieldEmbedding::identity(&k);
        assert_eq!(id.relative_automorphisms().len(), 1);
    }
}
