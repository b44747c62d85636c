use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use oddcut_bench::{circuit_cases, cut_cases};
use oddcut_core::generators::ladder;
use oddcut_core::{extend_to_even_subgraph, feasible_by_bruteforce, find_circuit, min_odd_cut};

fn bench_find_circuit(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_circuit");
    for case in circuit_cases() {
        group.bench_with_input(BenchmarkId::from_parameter(&case.name), &case, |b, case| {
            b.iter(|| find_circuit(black_box(&case.graph), black_box(&case.prescribed)).unwrap())
        });
    }
    group.finish();
}

fn bench_min_odd_cut(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_odd_cut");
    for case in cut_cases() {
        group.bench_with_input(BenchmarkId::from_parameter(&case.name), &case, |b, case| {
            b.iter(|| min_odd_cut(black_box(&case.graph)).unwrap())
        });
    }
    group.finish();
}

fn bench_even_extension(c: &mut Criterion) {
    let mut group = c.benchmark_group("extend_to_even_subgraph");
    for case in circuit_cases() {
        group.bench_with_input(BenchmarkId::from_parameter(&case.name), &case, |b, case| {
            b.iter(|| extend_to_even_subgraph(black_box(&case.graph), black_box(&case.prescribed)).unwrap())
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let inst = ladder(6).unwrap();
    c.bench_function("feasible_by_bruteforce/ladder_6", |b| {
        b.iter(|| feasible_by_bruteforce(black_box(&inst.graph), black_box(&inst.prescribed)).unwrap())
    });
}

criterion_group!(benches, bench_find_circuit, bench_min_odd_cut, bench_even_extension, bench_oracle);
criterion_main!(benches);
