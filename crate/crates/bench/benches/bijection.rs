use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use tangled::{beta, beta_inv, tangled_diagrams, vacillating_tableaux, Move, TangledDiagram, VacillatingTableau};

fn bijection(c: &mut Criterion) {
    let diagrams: Vec<TangledDiagram> = tangled_diagrams(4, 6).unwrap().collect();
    let tableaux: Vec<VacillatingTableau> =
        vacillating_tableaux(4, None, &Move::ALL, 6).unwrap().collect();

    c.bench_function("beta_inv_all_n4", |b| {
        b.iter(|| {
            for d in &diagrams {
                black_box(beta_inv(d).unwrap());
            }
        })
    });

    c.bench_function("beta_all_n4", |b| {
        b.iter(|| {
            for v in &tableaux {
                black_box(beta(v).unwrap());
            }
        })
    });

    c.bench_function("inflate_deflate_all_n4", |b| {
        b.iter(|| {
            for d in &diagrams {
                black_box(d.inflate().deflate().unwrap());
            }
        })
    });

    c.bench_function("crossing_numbers_all_n4", |b| {
        b.iter(|| {
            diagrams
                .iter()
                .map(|d| d.crossing_number())
                .max()
                .unwrap_or(0)
        })
    });
}

criterion_group!(benches, bijection);
criterion_main!(benches);
