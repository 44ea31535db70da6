use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use tangled::{catalan, count_all, count_by_vt, count_matchings, sequence_table, tangled_diagrams};

fn counting(c: &mut Criterion) {
    c.bench_function("catalan_100", |b| b.iter(|| catalan(black_box(100))));

    c.bench_function("count_matchings_k4_m40", |b| {
        b.iter(|| count_matchings(black_box(4), black_box(40)))
    });

    c.bench_function("count_all_k3_n30", |b| {
        b.iter(|| count_all(black_box(3), black_box(30)))
    });

    c.bench_function("count_by_vt_k3_n30", |b| {
        b.iter(|| count_by_vt(black_box(3), black_box(30)))
    });

    c.bench_function("sequence_table_k3_n10", |b| {
        b.iter(|| sequence_table(black_box(3), black_box(10)))
    });

    c.bench_function("stream_diagrams_n4", |b| {
        b.iter(|| tangled_diagrams(black_box(4), 6).unwrap().count())
    });
}

criterion_group!(benches, counting);
criterion_main!(benches);
