//! Criterion benchmarks for the fibsection library.

use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use fibsection::{
    binet_fib_lucas, conv_by_route, fib, monic_signed_u, Route, SectionParams, Sign,
};

pub fn benchmarks(c: &mut Criterion) {
    fibonacci(c);
    convolution(c);
    chebyshev(c);
}

fn fibonacci(c: &mut Criterion) {
    let mut group = c.benchmark_group("fibonacci");
    for n in [1_000i64, 10_000, 100_000] {
        group.bench_with_input(BenchmarkId::new("fast_doubling", n), &n, |b, &n| {
            b.iter(|| fib(black_box(n)))
        });
        group.bench_with_input(BenchmarkId::new("golden_ring", n), &n, |b, &n| {
            b.iter(|| binet_fib_lucas(black_box(n)))
        });
    }
    group.finish();
}

fn convolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("convolution");
    let p = SectionParams::new(7, 3, 4).expect("valid step");
    for route in Route::ALL {
        group.bench_with_input(BenchmarkId::new(route.as_str(), 128), &128usize, |b, &n| {
            b.iter(|| conv_by_route(black_box(&p), route, n))
        });
    }
    group.finish();
}

fn chebyshev(c: &mut Criterion) {
    let mut group = c.benchmark_group("chebyshev");
    for n in [50usize, 200] {
        group.bench_with_input(BenchmarkId::new("monic_signed_u", n), &n, |b, &n| {
            b.iter(|| monic_signed_u(black_box(n), 3, Sign::Plus))
        });
    }
    group.finish();
}
