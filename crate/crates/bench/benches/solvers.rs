use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hyperpath::geometric::{random_geometric, GeoParams};

fn static_solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("static_sssp");
    group.sample_size(20);
    for n in [200usize, 600] {
        let side = n as f64;
        let inst = random_geometric(&GeoParams {
            n,
            side,
            radius: side.sqrt() * 1.5,
            spacing: 2.0,
            seed: 42,
        })
        .unwrap();
        let h = &inst.hypergraph;
        let s = inst.corner_vertex().unwrap();
        group.bench_with_input(BenchmarkId::new("gallo", n), h, |b, h| {
            b.iter(|| black_box(hyperpath::gallo_sssp(h, s).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("dr", n), h, |b, h| {
            b.iter(|| black_box(hyperpath::dr_sp(h, s).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, static_solvers);
criterion_main!(benches);
