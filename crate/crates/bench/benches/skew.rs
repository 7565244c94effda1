use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use skewpoly::bch::{bch2_code, bch2_generator};
use skewpoly::codes::{enumerate_right_divisors, Modulus, SkewCyclicCode};
use skewpoly::roots::{minimal_polynomial, AlgebraicSet};
use skewpoly_bench::{bch2_example, dense, ring};

fn arithmetic(c: &mut Criterion) {
    let r = ring("F2_6", 1);
    let f = dense(&r, 40, 0);
    let g = dense(&r, 17, 5);
    c.bench_function("mul deg 40 x 17 over F64", |b| {
        b.iter(|| black_box(&f) * black_box(&g))
    });
    let prod = &f * &g;
    c.bench_function("right_div_rem deg 57 / 17 over F64", |b| {
        b.iter(|| black_box(&prod).right_div_rem(black_box(&g)).unwrap())
    });
    c.bench_function("gcrd deg 40, 17 over F64", |b| {
        b.iter(|| black_box(&f).gcrd(black_box(&g)).unwrap())
    });
    c.bench_function("lclm deg 40, 17 over F64", |b| {
        b.iter(|| black_box(&f).lclm(black_box(&g)).unwrap())
    });
}

fn roots(c: &mut Criterion) {
    let r = ring("F2_12", 1);
    let field = r.field().clone();
    let pts: Vec<_> = (0..12)
        .map(|k| field.pow(field.generator(), 37 * k + 1))
        .collect();
    let set = AlgebraicSet::new(&field, pts).unwrap();
    c.bench_function("minimal polynomial of 12 points in F4096", |b| {
        b.iter(|| minimal_polynomial(black_box(&r), black_box(&set)).unwrap())
    });
}

fn divisors(c: &mut Criterion) {
    let r = ring("F4", 1);
    let f = r.parse("x^14+1").unwrap();
    let mut group = c.benchmark_group("divisors");
    group.sample_size(10);
    group.bench_function("x^14+1 over F4", |b| {
        b.iter(|| enumerate_right_divisors(black_box(&f), None).unwrap())
    });
    group.finish();
}

fn codes(c: &mut Criterion) {
    let r = ring("F8", 1);
    let m = Modulus::new(&r.parse("x^7+a").unwrap()).unwrap();
    let g = r.parse("x^4+a*x^3+a^5*x^2+a").unwrap();
    c.bench_function("circulant 7x7 over F8", |b| {
        b.iter(|| m.circulant(black_box(&g)).unwrap())
    });
    let spec = bch2_example();
    c.bench_function("second-kind generator length 12", |b| {
        b.iter(|| bch2_generator(black_box(&spec)).unwrap())
    });
    let code: SkewCyclicCode = bch2_code(&spec).unwrap().code;
    let lin = code.linear_code();
    let mut group = c.benchmark_group("distance");
    group.sample_size(10);
    group.bench_function("[12,6] over F64", |b| {
        b.iter(|| lin.min_distance().unwrap())
    });
    group.finish();
}

criterion_group!(benches, arithmetic, roots, divisors, codes);
criterion_main!(benches);
