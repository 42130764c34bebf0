use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use zmlat_bench::sample_groups;
use zmlat_core::{lattice, normal, Oracle};

fn formulas(c: &mut Criterion) {
    let mut group = c.benchmark_group("formulas");
    for t in sample_groups() {
        group.bench_with_input(BenchmarkId::new("enumerate_subgroups", t), &t, |b, t| {
            b.iter(|| lattice::enumerate_subgroups(black_box(t)))
        });
        group.bench_with_input(BenchmarkId::new("normal_report", t), &t, |b, t| {
            b.iter(|| normal::NormalLatticeReport::new(black_box(t)))
        });
        group.bench_with_input(BenchmarkId::new("count_eq1", t), &t, |b, t| {
            b.iter(|| normal::count_eq1(black_box(t)))
        });
    }
    group.finish();
}

fn materialization(c: &mut Criterion) {
    let mut group = c.benchmark_group("materialization");
    for t in sample_groups() {
        group.bench_with_input(BenchmarkId::new("materialize_all", t), &t, |b, t| {
            b.iter(|| lattice::materialize_all(black_box(t)).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let o = Oracle::default();
    for t in sample_groups() {
        group.bench_with_input(BenchmarkId::new("all_subgroups", t), &t, |b, t| {
            b.iter(|| o.all_subgroups(black_box(t)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, formulas, materialization, oracle);
criterion_main!(benches);
