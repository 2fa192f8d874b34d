use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use slashfree::avoidance::{build_avoidance_graph, recognize_via_avoidance};
use slashfree::comparability::recognize_comparability;
use slashfree::constructions::{random, random_interval};
use slashfree::forcing::{build_pair_graph, find_invertible_pair};

fn bench_invertible_pair_route(c: &mut Criterion) {
    let mut group = c.benchmark_group("invertible_pair_route");
    for n in [20usize, 50, 100] {
        let g = random(n, 0.3, 7).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| find_invertible_pair(std::hint::black_box(g)).is_none())
        });
    }
    group.finish();
}

fn bench_avoidance_route(c: &mut Criterion) {
    let mut group = c.benchmark_group("avoidance_route");
    for n in [20usize, 50, 100] {
        let g = random(n, 0.3, 7).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| recognize_via_avoidance(std::hint::black_box(g)))
        });
    }
    group.finish();
}

fn bench_interval_yes_instances(c: &mut Criterion) {
    let mut group = c.benchmark_group("interval_yes");
    for n in [20usize, 40] {
        let g = random_interval(n, 3 * n as u64, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| find_invertible_pair(std::hint::black_box(g)).is_none())
        });
    }
    group.finish();
}

fn bench_building_blocks(c: &mut Criterion) {
    let g = random(100, 0.3, 7).unwrap();
    c.bench_function("build_pair_graph_n100", |b| {
        b.iter(|| build_pair_graph(std::hint::black_box(&g)))
    });
    c.bench_function("build_avoidance_graph_n100", |b| {
        b.iter(|| build_avoidance_graph(std::hint::black_box(&g)))
    });
    let star = build_avoidance_graph(&g);
    c.bench_function("comparability_on_star_n100", |b| {
        b.iter(|| recognize_comparability(std::hint::black_box(&star.graph)).is_some())
    });
}

criterion_group!(
    benches,
    bench_invertible_pair_route,
    bench_avoidance_route,
    bench_interval_yes_instances,
    bench_building_blocks
);
criterion_main!(benches);
