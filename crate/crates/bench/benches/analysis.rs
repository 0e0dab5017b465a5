use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use scb_core::analyzer::{gamma_sup, SupOptions};
use scb_core::arith::{rat, Precision};
use scb_core::methods::{catalog, known_value, KnownValue};
use scb_core::poly::isolate_real_roots;
use scb_core::recursion::{closed_form, GammaPoint};

fn closed_form_bdf5(c: &mut Criterion) {
    let m = catalog("bdf5").unwrap();
    let g = GammaPoint::Rational(rat(3, 10));
    let p = Precision::digits(64).unwrap();
    c.bench_function("closed_form_bdf5", |b| b.iter(|| closed_form(&m, black_box(&g), p).unwrap()));
}

fn gamma_sup_bdf2(c: &mut Criterion) {
    let m = catalog("bdf2").unwrap();
    let opts = SupOptions::default();
    let mut group = c.benchmark_group("gamma_sup");
    group.sample_size(10);
    group.bench_function("bdf2", |b| b.iter(|| gamma_sup(black_box(&m), &opts).unwrap()));
    group.finish();
}

fn bdf6_isolation(c: &mut Criterion) {
    let Some(KnownValue::RootOf { poly, .. }) = known_value("bdf6") else { unreachable!() };
    c.bench_function("isolate_real_roots_bdf6", |b| b.iter(|| isolate_real_roots(black_box(&poly))));
}

criterion_group!(benches, closed_form_bdf5, gamma_sup_bdf2, bdf6_isolation);
criterion_main!(benches);
