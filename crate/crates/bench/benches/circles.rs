use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fq_incidence::{check_beck, circle_census, determined_circles, DEFAULT_BUDGET};
use fq_incidence_bench::random_plane_set;

fn bench_circles(c: &mut Criterion) {
    let mut group = c.benchmark_group("circles");
    group.sample_size(20);
    for q in [7u64, 13] {
        let p = random_plane_set(q, 5 * q as usize, 3);
        group.bench_with_input(BenchmarkId::new("determined", q), &p, |b, p| {
            b.iter(|| determined_circles(p, DEFAULT_BUDGET).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("census", q), &p, |b, p| {
            b.iter(|| circle_census(p, DEFAULT_BUDGET).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("check_beck", q), &p, |b, p| {
            b.iter(|| check_beck(p, DEFAULT_BUDGET).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_circles);
criterion_main!(benches);
