use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pinnacle_core::{count_with, max_cardinality, Method};

fn methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("count");
    for (m, n) in [(3, 10), (10, 30), (20, 60)] {
        let d = max_cardinality(n);
        for method in Method::INDEPENDENT {
            group.bench_with_input(
                BenchmarkId::new(method.name(), format!("{m}x{n}")),
                &(m, n),
                |b, &(m, n)| b.iter(|| count_with(method, black_box(m), black_box(n), d).unwrap()),
            );
        }
    }
    group.finish();
}

fn table(c: &mut Criterion) {
    c.bench_function("table/all", |b| {
        b.iter(|| {
            for (m, n) in pinnacle_bench::table_cells() {
                black_box(count_with(Method::All, m, n, max_cardinality(n)).unwrap());
            }
        })
    });
}

criterion_group!(benches, methods, table);
criterion_main!(benches);
