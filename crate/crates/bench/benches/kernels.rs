use criterion::{criterion_group, criterion_main, Criterion};
use knar_core::euler::{narayana_euler_input, q_polynomial};
use knar_core::narayana::{multiset_series, square_bracket, sulanke_narayana};
use knar_core::oracle::{count_narayana_paths, count_sulanke_paths, Budget};
use std::hint::black_box;

fn bench_square_bracket(c: &mut Criterion) {
    // the acceptance performance envelope: a 6x6 binomial determinant with
    // ~40-digit entries
    c.bench_function("square_bracket k=6 r=30 j=20", |b| {
        b.iter(|| square_bracket(black_box(&[30; 6]), black_box(20)))
    });
}

fn bench_multiset_series(c: &mut Criterion) {
    c.bench_function("multiset_series k=4 r=10 order=200", |b| {
        b.iter(|| multiset_series(black_box(4), black_box(10), black_box(200)))
    });
}

fn bench_sulanke_row(c: &mut Criterion) {
    c.bench_function("sulanke_narayana row k=4 r=6", |b| {
        b.iter(|| (0..=15).map(|j| sulanke_narayana(black_box(4), black_box(6), j)).sum::<knar_core::Int>())
    });
}

fn bench_q_polynomial(c: &mut Criterion) {
    let mut group = c.benchmark_group("q_polynomial");
    for (k, r) in [(3i64, 5i64), (4, 6)] {
        let input = narayana_euler_input(k, r);
        group.bench_function(format!("k={k} r={r}"), |b| {
            b.iter(|| q_polynomial(black_box(&input)))
        });
    }
    group.finish();
}

fn bench_oracles(c: &mut Criterion) {
    let budget = Budget::default();
    c.bench_function("count_sulanke_paths k=3 r=4", |b| {
        b.iter(|| count_sulanke_paths(black_box(3), black_box(4), &budget).unwrap())
    });
    c.bench_function("count_narayana_paths a=(7,7,7) j=4", |b| {
        b.iter(|| count_narayana_paths(black_box(&[7, 7, 7]), black_box(4), &budget).unwrap())
    });
}

criterion_group!(
    kernels,
    bench_square_bracket,
    bench_multiset_series,
    bench_sulanke_row,
    bench_q_polynomial,
    bench_oracles
);
criterion_main!(kernels);
