//! Sequential against rayon-backed paths. Build with
//! `--no-default-features` to see the dispatching functions fall back to
//! the sequential code.

use std::num::Wrapping;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use partnet::divisor::{trace, trace_sequential};
use partnet::evector::{apply_shift_matrix, apply_shift_matrix_sequential, e_vector_in, ShiftMatrixSpec};
use partnet::sigma::{sigma1, sigma1_sequential};
use partnet::{counting, Budget};

fn bench_trace(c: &mut Criterion) {
    let mut group = c.benchmark_group("trace");
    for n in [40u64, 70] {
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| trace_sequential(black_box(n)))
        });
        group.bench_with_input(BenchmarkId::new("dispatch", n), &n, |b, &n| b.iter(|| trace(black_box(n))));
    }
    group.finish();
}

fn bench_sigma(c: &mut Criterion) {
    let mut group = c.benchmark_group("sigma1");
    for n in [40u64, 70] {
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| sigma1_sequential(black_box(n)))
        });
        group.bench_with_input(BenchmarkId::new("dispatch", n), &n, |b, &n| b.iter(|| sigma1(black_box(n))));
    }
    group.finish();
}

fn bench_shift(c: &mut Criterion) {
    let mut group = c.benchmark_group("shift_matrix");
    for n in [300usize, 1000] {
        let prev = e_vector_in::<Wrapping<i64>>(n - 1, Budget::default()).unwrap().into_entries();
        let spec = ShiftMatrixSpec::new(n, n - 1);
        group.bench_with_input(BenchmarkId::new("sequential", n), &prev, |b, v| {
            b.iter(|| apply_shift_matrix_sequential(spec, black_box(v)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("dispatch", n), &prev, |b, v| {
            b.iter(|| apply_shift_matrix(spec, black_box(v)).unwrap())
        });
    }
    group.finish();
}

fn bench_p(c: &mut Criterion) {
    let mut group = c.benchmark_group("p");
    for n in [200u64, 800] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| counting::p(black_box(n))));
    }
    group.finish();
}

criterion_group!(benches, bench_trace, bench_sigma, bench_shift, bench_p);
criterion_main!(benches);
