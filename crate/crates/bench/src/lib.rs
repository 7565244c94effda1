//! Fixtures shared by the criterion benchmarks in `benches/`.

use skewpoly::bch::Bch2Spec;
use skewpoly::field::presets;
use skewpoly::{Field, SkewPoly, SkewRing};

pub fn ring(name: &str, e: u32) -> SkewRing {
    SkewRing::new(&Field::new(presets::by_name(name).unwrap()), e).unwrap()
}

/// A dense polynomial of degree `n` with coefficients cycling through the
/// nonzero field elements.
pub fn dense(ring: &SkewRing, n: usize, offset: usize) -> SkewPoly {
    let nonzero: Vec<_> = ring.field().nonzero_elements().collect();
    ring.poly(
        (0..=n)
            .map(|i| nonzero[(i + offset) % nonzero.len()])
            .collect(),
    )
}

/// Second-kind skew-BCH parameters with a sextic generator of length 12.
pub fn bch2_example() -> Bch2Spec {
    let emb = presets::f2_6_in_f2_12();
    let ring = SkewRing::new(emb.source(), 1).unwrap();
    let l = emb.target().clone();
    Bch2Spec {
        ring,
        emb,
        alpha: l.pow(l.generator(), 5),
        b: 0,
        t1: 11,
        t2: 1,
        delta: 4,
        nu: 0,
    }
}
