use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use scb_core::arith::{rat, Precision};
use scb_core::methods::catalog;
use scb_core::recursion::{eval_mu_interval, exact_sign_scan};

fn interval_run(c: &mut Criterion) {
    let m = catalog("bdf4").unwrap();
    let g = rat(48625, 100000);
    let mut group = c.benchmark_group("mu_interval_2000_terms");
    for digits in [64, 500, 2000] {
        let p = Precision::digits(digits).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(digits), &p, |b, p| {
            b.iter(|| eval_mu_interval(&m, black_box(&g), 2000, *p).unwrap())
        });
    }
    group.finish();
}

fn exact_run(c: &mut Criterion) {
    let m = catalog("bdf4").unwrap();
    let g = rat(48625, 100000);
    c.bench_function("mu_exact_scan_2000_terms", |b| {
        b.iter(|| exact_sign_scan(&m, black_box(&g), 1, 2000, None).unwrap())
    });
}

criterion_group!(benches, interval_run, exact_run);
criterion_main!(benches);
