use criterion::{criterion_group, criterion_main, Criterion};
use steinerlab_core::extremal::{e_k_exact, ExtremalTable, SearchOptions};
use steinerlab_core::ExtremalQuery;

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("extremal");
    group.sample_size(10);
    let opts = SearchOptions::default();
    for (n, l, d, k) in [(6, 3, 4, 5), (6, 4, 4, 4), (7, 3, 5, 4)] {
        let q = ExtremalQuery::new(n, l, d, k);
        group.bench_function(format!("e_k_exact/n{n}_l{l}_d{d}_k{k}"), |b| b.iter(|| e_k_exact(&q, &opts).unwrap()));
    }
    group.bench_function("table_build/n6", |b| b.iter(|| ExtremalTable::build(6, 1, 16).unwrap()));
    group.finish();
}

criterion_group!(benches, search);
criterion_main!(benches);
