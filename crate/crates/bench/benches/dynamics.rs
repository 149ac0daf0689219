use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};
use std::hint::black_box;

use hyperpath::changes::{ChangeGenerator, ChangeMode, ChangeModelParams};
use hyperpath::dynamic::{dr::DrDsp, he::HeDsp};
use hyperpath::geometric::{random_geometric, GeoParams};
use hyperpath::{ChangeEvent, Hypergraph, ShortestPathMaintainer};

struct Scenario {
    base: Hypergraph,
    source: usize,
    script: Vec<ChangeEvent>,
}

/// Record a fixed event script per change model so every measured run
/// replays identical work.
fn scenario(mode: ChangeMode) -> Scenario {
    let inst = random_geometric(&GeoParams {
        n: 300,
        side: 300.0,
        radius: 300f64.sqrt(),
        spacing: 1.0,
        seed: 7,
    })
    .unwrap();
    let source = inst.corner_vertex().unwrap();
    let base = inst.hypergraph;
    let mut h = base.clone();
    let mut he = HeDsp::new(&h, source).unwrap();
    let params = ChangeModelParams {
        p_insert: 0.25,
        p_delete: 0.25,
        w_min: 10.0,
        w_max: 20.0,
        mode,
        seed: 1,
        integer_weights: false,
    };
    let mut gen = ChangeGenerator::new(params, &h).unwrap();
    let mut script = Vec::new();
    while script.len() < 400 {
        match gen.next_change(&h, Some(he.state())) {
            Ok(ev) => {
                he.apply(&mut h, ev).unwrap();
                script.push(ev);
            }
            Err(_) => continue,
        }
    }
    Scenario { base, source, script }
}

fn replay(sc: &Scenario, algo: &str) {
    let mut h = sc.base.clone();
    let mut he;
    let mut dr;
    let m: &mut dyn ShortestPathMaintainer = if algo == "he" {
        he = HeDsp::new(&h, sc.source).unwrap();
        &mut he
    } else {
        dr = DrDsp::new(&h, sc.source).unwrap();
        &mut dr
    };
    for &ev in &sc.script {
        black_box(m.apply(&mut h, ev).unwrap());
    }
}

fn dynamic_replay(c: &mut Criterion) {
    let mut group = c.benchmark_group("dynamic_replay_400_events");
    group.sample_size(10);
    for (name, mode) in [("random", ChangeMode::Random), ("targeted", ChangeMode::Targeted)] {
        let sc = scenario(mode);
        for algo in ["he", "dr"] {
            group.bench_with_input(BenchmarkId::new(algo, name), &sc, |b, sc| {
                b.iter_batched(|| (), |()| replay(sc, algo), BatchSize::PerIteration)
            });
        }
    }
    group.finish();
}

criterion_group!(benches, dynamic_replay);
criterion_main!(benches);
