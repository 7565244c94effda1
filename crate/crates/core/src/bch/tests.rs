use proptest::prelude::*;

use super::*;
use crate::cancel::CancelToken;
use crate::codes::{annihilates, DistanceStrategy};
use crate::field::{presets, Field};

fn bch1_example(n: usize) -> Bch1Spec {
    let emb = presets::f2_6_in_f2_12();
    let ring = SkewRing::new(emb.source(), 1).unwrap();
    let l = emb.target().clone();
    Bch1Spec {
        ring,
        emb,
        alpha: l.generator(),
        b: 0,
        t1: 23,
        t2: 1,
        delta: 4,
        nu: 0,
        n,
    }
}

fn bch2_example() -> Bch2Spec {
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

fn f4_in_f16() -> (SkewRing, FieldEmbedding) {
    let k = Field::new(presets::f4());
    let l = Field::new(presets::f16());
    let emb = FieldEmbedding::find(&k, &l).unwrap();
    (SkewRing::new(&k, 1).unwrap(), emb)
}

#[test]
fn first_kind_generator() {
    let spec = bch1_example(12);
    let gen = bch1_generator(&spec).unwrap();
    assert_eq!(gen.g, spec.ring.parse("x^3+a^47*x^2+a^19*x+a^40").unwrap());
    assert_eq!(gen.designed_distance, 4);
    assert_eq!(gen.exponents, vec![0, 23, 46]);
    assert_eq!(gen.roots.len(), 5);
}

#[test]
fn first_kind_length_bound() {
    let spec = bch1_example(12);
    let big = spec.big_ring().unwrap();
    let l = spec.emb.target();
    assert_eq!(
        max_admissible_length(big.aut(), l.pow(spec.alpha, 23)),
        Some(12)
    );
    assert_eq!(
        max_admissible_length(big.aut(), l.pow(spec.alpha, 3)),
        Some(12)
    );
    assert_eq!(max_admissible_length(big.aut(), Fe::ONE), Some(1));
    assert_eq!(max_admissible_length(big.aut(), Fe::ZERO), None);
    assert!(matches!(
        bch1_generator(&bch1_example(13)),
        Err(Error::ConditionViolated(_))
    ));
}

#[test]
fn first_kind_codes_by_length() {
    let g = bch1_generator(&bch1_example(12)).unwrap().g;
    for n in 3..=12 {
        let dc = bch1_code(&bch1_example(n)).unwrap();
        assert_eq!(dc.code.k(), n - 3);
        let f = dc.code.modulus();
        assert_eq!(f.is_constacyclic(), n == 12, "n = {n}");
        if n == 12 {
            assert_eq!(f.constant(), Some(Fe::ONE));
        } else {
            assert_eq!(*f.poly(), g.left_shift(n - 3));
        }
        if n > 3 {
            let d = dc.code.linear_code().min_distance().unwrap();
            assert_eq!(d, 4, "n = {n}");
        }
    }
}

#[test]
fn first_kind_parity_annihilates() {
    let spec = bch1_example(12);
    let gen = bch1_generator(&spec).unwrap();
    let code = bch1_code(&spec).unwrap().code;
    let m = code
        .vandermonde_parity_check(gen.roots.elements(), &spec.emb)
        .unwrap();
    for row in code.generator_matrix().row_iter() {
        assert!(annihilates(&m, &spec.emb, row).unwrap());
    }
    let mut e = vec![Fe::ZERO; 12];
    e[11] = Fe::ONE;
    assert!(!code.contains(&e).unwrap());
    assert!(!annihilates(&m, &spec.emb, &e).unwrap());
}

#[test]
fn first_kind_conditions() {
    let mut spec = bch1_example(12);
    spec.delta = 1;
    assert!(matches!(
        bch1_generator(&spec),
        Err(Error::ConditionViolated(_))
    ));
    let mut spec = bch1_example(12);
    spec.alpha = Fe::ZERO;
    assert!(matches!(
        bch1_generator(&spec),
        Err(Error::ConditionViolated(_))
    ));
    let mut spec = bch1_example(12);
    spec.ring = SkewRing::new(&Field::new(presets::f4()), 1).unwrap();
    assert_eq!(bch1_generator(&spec).unwrap_err(), Error::MismatchedField);
}

/// Brute-force sweep over `F_4 ⊂ F_16`: every admissible first-kind code has
/// distance at least its designed distance.
#[test]
fn first_kind_designed_distance_sound() {
    let (ring, emb) = f4_in_f16();
    let l = emb.target().clone();
    let mut checked = 0;
    for alpha in l.nonzero_elements() {
        for t1 in 1..4 {
            for b in 0..3 {
                for delta in 2..5 {
                    for n in 2..=8 {
                        let spec = Bch1Spec {
                            ring: ring.clone(),
                            emb: emb.clone(),
                            alpha,
                            b,
                            t1,
                            t2: 1,
                            delta,
                            nu: 0,
                            n,
                        };
                        let Ok(dc) = bch1_code(&spec) else { continue };
                        if dc.code.k() == 0 {
                            continue;
                        }
                        let d = dc.code.linear_code().min_distance().unwrap();
                        assert!(
                            d as u64 >= delta,
                            "alpha {alpha:?} t1 {t1} b {b} delta {delta} n {n}: d = {d}"
                        );
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn first_kind_with_nu() {
    let (ring, emb) = f4_in_f16();
    let l = emb.target().clone();
    let mut checked = 0;
    for alpha in l.nonzero_elements() {
        for (t1, t2) in [(1, 2), (2, 1), (1, 3)] {
            for n in 3..=8 {
                let spec = Bch1Spec {
                    ring: ring.clone(),
                    emb: emb.clone(),
                    alpha,
                    b: 1,
                    t1,
                    t2,
                    delta: 3,
                    nu: 1,
                    n,
                };
                let Ok(dc) = bch1_code(&spec) else { continue };
                assert_eq!(dc.designed_distance, 4);
                if dc.code.k() == 0 {
                    continue;
                }
                assert!(dc.code.linear_code().min_distance().unwrap() >= 4);
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn modulus_choice() {
    let r = SkewRing::new(&Field::new(presets::f4()), 1).unwrap();
    let g = r.parse("x+a").unwrap();
    let f = default_modulus(&g, 4).unwrap();
    assert_eq!(f, r.x_n_minus(4, Fe::ONE));
    let g = r.parse("x^2+a*x").unwrap();
    assert_eq!(default_modulus(&g, 3).unwrap(), g.left_shift(1));
    assert!(matches!(
        default_modulus(&g, 1),
        Err(Error::ConditionViolated(_))
    ));
}

#[test]
fn normal_elements() {
    let f4 = Field::new(presets::f4());
    let aut = FrobeniusAut::new(&f4, 1).unwrap();
    assert_eq!(find_normal_element(&aut).unwrap(), f4.generator());
    assert!(!is_normal(&aut, Fe::ONE));
    let l = Field::new(presets::f2_12());
    let aut = FrobeniusAut::new(&l, 1).unwrap();
    assert!(is_normal(&aut, l.pow(l.generator(), 5)));
    assert!(!is_normal(&aut, Fe::ONE));
    assert!(is_normal(&aut, find_normal_element(&aut).unwrap()));
}

/// Normality over `F_2` agrees with `F_2`-independence of the bit vectors.
#[test]
fn normality_matches_bit_rank() {
    let f16 = Field::new(presets::f16());
    let f2 = Field::new(presets::f2());
    let aut = FrobeniusAut::new(&f16, 1).unwrap();
    for a in f16.elements() {
        let rows: Vec<Vec<Fe>> = (0..4)
            .map(|i| {
                f16.coeffs(aut.power(i, a))
                    .into_iter()
                    .map(|c| f2.elem(c).unwrap())
                    .collect()
            })
            .collect();
        let independent = Matrix::from_rows(&f2, rows, 4).unwrap().rank() == 4;
        assert_eq!(is_normal(&aut, a), independent, "{a:?}");
    }
}

#[test]
fn second_kind_example() {
    let spec = bch2_example();
    assert_eq!(spec.n(), 12);
    let gen = bch2_generator(&spec).unwrap();
    assert_eq!(gen.beta, spec.alpha);
    assert_eq!(gen.s, vec![0, 10, 11]);
    assert_eq!(gen.s_bar, vec![0, 4, 5, 6, 10, 11]);
    assert_eq!(
        gen.g,
        spec.ring
            .parse("x^6+a^61*x^5+a^41*x^4+a^4*x^3+a^20*x^2+a^46*x+a^7")
            .unwrap()
    );
    let code = bch2_code(&spec).unwrap().code;
    assert_eq!(code.k(), 6);
    let lin = code.linear_code();
    let cancel = CancelToken::new();
    assert_eq!(
        lin.min_distance_with(DistanceStrategy::Columns, &cancel)
            .unwrap(),
        6
    );
    assert!(!lin.is_mds().unwrap());
}

#[test]
fn second_kind_roots() {
    let spec = bch2_example();
    let gen = bch2_generator(&spec).unwrap();
    let big = spec.ring.extend(&spec.emb).unwrap();
    let g = gen.g.embed(&spec.emb, &big).unwrap();
    for &t in &gen.s_bar {
        assert!(
            g.is_right_root(big.sigma_pow(t as i64, gen.beta)),
            "t = {t}"
        );
    }
}

#[test]
fn second_kind_conditions() {
    let mut spec = bch2_example();
    spec.t1 = 2;
    assert!(matches!(
        bch2_generator(&spec),
        Err(Error::ConditionViolated(_))
    ));
    let mut spec = bch2_example();
    spec.t2 = 4;
    spec.nu = 1;
    assert!(matches!(
        bch2_generator(&spec),
        Err(Error::ConditionViolated(_))
    ));
    let mut spec = bch2_example();
    spec.alpha = Fe::ONE;
    assert!(matches!(
        bch2_generator(&spec),
        Err(Error::ConditionViolated(_))
    ));
}

#[test]
fn second_kind_sweep_divides_and_meets_design() {
    let (ring, emb) = f4_in_f16();
    let big = ring.extend(&emb).unwrap();
    let alpha = find_normal_element(big.aut()).unwrap();
    for b in 0..4 {
        for t1 in [1, 3] {
            for delta in 2..4 {
                let spec = Bch2Spec {
                    ring: ring.clone(),
                    emb: emb.clone(),
                    alpha,
                    b,
                    t1,
                    t2: 1,
                    delta,
                    nu: 0,
                };
                let dc = bch2_code(&spec).unwrap();
                if dc.code.k() > 0 {
                    assert!(dc.code.linear_code().min_distance().unwrap() as u64 >= delta);
                }
            }
        }
    }
}

#[test]
fn skew_rs() {
    let f16 = Field::new(presets::f16());
    let r = SkewRing::new(&f16, 1).unwrap();
    let alpha = f16.generator();
    let code = skew_rs1(&r, alpha, 0, 3, 4, None).unwrap();
    assert_eq!(code.k(), 2);
    assert!(code.linear_code().is_mds().unwrap());
    assert!(matches!(
        skew_rs1(&r, alpha, 0, 3, 5, None),
        Err(Error::ConditionViolated(_))
    ));
    assert!(matches!(
        skew_rs1(&r, alpha, 0, 6, 4, None),
        Err(Error::ConditionViolated(_))
    ));
    let bad = r.x_n_minus(3, Fe::ONE);
    assert!(matches!(
        skew_rs1(&r, alpha, 0, 3, 4, Some(&bad)),
        Err(Error::DimensionMismatch(_))
    ));
}

#[test]
fn evaluation_codes() {
    let f8 = Field::new(presets::f8());
    let id = SkewRing::new(&f8, 3).unwrap();
    let pts: Vec<Fe> = f8.nonzero_elements().take(6).collect();
    let ev = evaluation_code(&id, &pts, 3).unwrap();
    assert_eq!(ev.code.k(), 3);
    assert_eq!(ev.code.min_distance().unwrap(), 4);
    let frob = SkewRing::new(&f8, 1).unwrap();
    assert_eq!(
        evaluation_code(&frob, &pts, 3).unwrap_err(),
        Error::RankDeficientPoints
    );
    assert!(matches!(
        evaluation_code(&id, &pts, 6),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        evaluation_code(&id, &pts, 0),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn frobenius_evaluation_codes_are_mds() {
    let f8 = Field::new(presets::f8());
    let r = SkewRing::new(&f8, 1).unwrap();
    // the nonzero elements form one class of rank 3, so 0 must be a point
    let elems: Vec<Fe> = f8.elements().collect();
    let mut found = 0;
    for mask in 0u32..(1 << elems.len()) {
        if mask.count_ones() != 4 {
            continue;
        }
        let pts: Vec<Fe> = (0..elems.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| elems[i])
            .collect();
        for k in 1..4 {
            match evaluation_code(&r, &pts, k) {
                Ok(ev) => {
                    assert!(ev.code.is_mds().unwrap());
                    found += 1;
                }
                Err(e) => assert_eq!(e, Error::RankDeficientPoints),
            }
        }
    }
    assert!(found > 0);
}

proptest! {
    #[test]
    fn coset_closure_is_least_union(s in prop::collection::vec(0u64..40, 1..5), m in 1u64..7, s_mult in 1u64..4) {
        let n = m * s_mult;
        let c = coset_closure(&s, m, n);
        for &x in &s {
            prop_assert!(c.contains(&(x % n)));
        }
        for &t in &c {
            prop_assert!(c.contains(&((t + m) % n)));
            // every element is forced by some element of S
            prop_assert!(s.iter().any(|&x| (x % n) % m == t % m));
        }
    }
}
