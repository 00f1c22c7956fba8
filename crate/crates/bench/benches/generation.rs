use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qcontext::geometry::GeometryFamily;
use qcontext::polar_space;

fn generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate");
    group.sample_size(10);
    for n in [3, 4] {
        group.bench_with_input(BenchmarkId::new("lines", n), &n, |b, &n| {
            b.iter(|| polar_space(n).unwrap().lines().len())
        });
        let space = polar_space(n).unwrap();
        group.bench_with_input(BenchmarkId::new("generators", n), &space, |b, s| {
            b.iter(|| s.generators().len())
        });
        for family in [GeometryFamily::Hyperbolic, GeometryFamily::Perpset] {
            group.bench_with_input(BenchmarkId::new(family.name(), n), &space, |b, s| {
                b.iter(|| s.enumerate_family(family).len())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, generation);
criterion_main!(benches);
