use std::hint::black_box;

use cbasis_bench::cases;
use cbasis_core::enumerate::{enumerate_level_k, enumerate_semi_infinite};
use cbasis_core::Freudenthal;
use criterion::{criterion_group, criterion_main, Criterion};

fn shifted(c: &mut Criterion) {
    let mut group = c.benchmark_group("shifted_m1");
    for (name, hw, depth) in cases() {
        group.bench_function(name, |b| b.iter(|| enumerate_level_k(black_box(&hw), 1, depth)));
    }
    group.finish();
}

fn semi_infinite(c: &mut Criterion) {
    let mut group = c.benchmark_group("semi_infinite");
    group.sample_size(10);
    for (name, hw, depth) in cases() {
        let depth = depth.min(3);
        group.bench_function(name, |b| b.iter(|| enumerate_semi_infinite(black_box(&hw), depth).unwrap()));
    }
    group.finish();
}

fn freudenthal(c: &mut Criterion) {
    let mut group = c.benchmark_group("freudenthal");
    group.sample_size(10);
    for (name, hw, depth) in cases() {
        group.bench_function(name, |b| {
            b.iter(|| Freudenthal::new(black_box(&hw)).character_table(depth).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, shifted, semi_infinite, freudenthal);
criterion_main!(benches);
