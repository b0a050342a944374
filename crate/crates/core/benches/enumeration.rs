use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fairdom::families::{complete, complete_bipartite, cycle, path};
use fairdom::{Engine, Graph};

fn engines() -> [(&'static str, Engine); 2] {
    [("sequential", Engine::sequential()), ("parallel", Engine::new())]
}

fn count(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_fd");
    group.sample_size(10);
    // sparse families prune almost everything; the complete graph prunes nothing
    let cases: [(&str, Graph, usize); 3] = [
        ("cycle24_k8", cycle(24).unwrap(), 8),
        ("knn10_k6", complete_bipartite(10, 10).unwrap(), 6),
        ("complete22_k11", complete(22).unwrap(), 11),
    ];
    for (name, g, k) in &cases {
        for (label, e) in engines() {
            group.bench_with_input(BenchmarkId::new(label, name), g, |b, g| b.iter(|| e.count_fd(g, *k).unwrap()));
        }
    }
    group.finish();
}

fn polynomial(c: &mut Criterion) {
    let mut group = c.benchmark_group("fd_polynomial");
    group.sample_size(10);
    let g = path(22).unwrap();
    for (label, e) in engines() {
        group.bench_function(BenchmarkId::new(label, "path22"), |b| b.iter(|| e.fd_polynomial(&g).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, count, polynomial);
criterion_main!(benches);
