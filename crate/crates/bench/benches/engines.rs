use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fq_incidence::{count_incidences, Engine, PointSet, SphereFamily, DEFAULT_BUDGET};
use fq_incidence_bench::{instance, space};

fn bench_random_instances(c: &mut Criterion) {
    let mut group = c.benchmark_group("incidences/random");
    for (q, d, np, ns) in [(11u64, 2usize, 100usize, 400usize), (13, 3, 400, 2000)] {
        let (p, f) = instance(q, d, np, ns, 1);
        for engine in Engine::ALL {
            group.bench_with_input(
                BenchmarkId::new(engine.name(), format!("q={q} d={d} |P|={np} |S|={ns}")),
                &(&p, &f),
                |b, (p, f)| b.iter(|| count_incidences(p, f, engine).unwrap()),
            );
        }
    }
    group.finish();
}

fn bench_full_space(c: &mut Criterion) {
    let mut group = c.benchmark_group("incidences/full");
    group.sample_size(10);
    let s = space(7, 3);
    let p = PointSet::full(s, DEFAULT_BUDGET).unwrap();
    let f = SphereFamily::all(s, DEFAULT_BUDGET).unwrap();
    for engine in Engine::ALL {
        group.bench_function(BenchmarkId::new(engine.name(), "q=7 d=3"), |b| {
            b.iter(|| count_incidences(&p, &f, engine).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_random_instances, bench_full_space);
criterion_main!(benches);
