use apolar_bench::{cyclic, generic_cubic};
use apolar_core::apolarity::apolar_data;
use apolar_core::artinian::{graded_hilbert_function, local_hilbert_function};
use apolar_core::catalog;
use apolar_core::deformations::tangent_dimension;
use apolar_core::{buchberger, MonomialOrder};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn groebner(c: &mut Criterion) {
    let mut g = c.benchmark_group("groebner");
    for n in [3, 4] {
        let ideal = cyclic(n).unwrap();
        g.bench_function(format!("cyclic-{n} degrevlex"), |b| {
            b.iter(|| buchberger(ideal.ring(), black_box(ideal.generators()), MonomialOrder::DegRevLex))
        });
    }
    let ideal = cyclic(3).unwrap();
    g.bench_function("cyclic-3 lex", |b| {
        b.iter(|| buchberger(ideal.ring(), black_box(ideal.generators()), MonomialOrder::Lex))
    });
    g.finish();
}

fn invariants(c: &mut Criterion) {
    let mut g = c.benchmark_group("invariants");
    let a = catalog::three_one_one(2).unwrap();
    // each iteration maps to a fresh ideal so no cached basis is reused
    g.bench_function("local hilbert (1,4,3,1,1)", |b| {
        b.iter(|| local_hilbert_function(&a.map_to_ring(a.ring()).unwrap()).unwrap())
    });
    g.bench_function("tangent (1,4,3,1,1)", |b| {
        b.iter(|| tangent_dimension(&a.map_to_ring(a.ring()).unwrap(), 4).unwrap())
    });
    let form = generic_cubic().unwrap();
    g.bench_function("apolar ideal of a cubic", |b| {
        b.iter(|| apolar_data(black_box(&form)).unwrap())
    });
    let square = apolar_data(&form).unwrap().ideal.square();
    g.bench_function("graded hilbert of (g⊥)^2", |b| {
        b.iter(|| graded_hilbert_function(black_box(&square)).unwrap())
    });
    g.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = groebner, invariants
}
criterion_main!(benches);
