use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use paley4::{
    baber_hypergraph, build_paley_hypergraph, design_parameters, extended_paley_tournament,
    load_m11, random_tournament, realize_as_tournament, switch, switching_equivalent, verify_span,
    FieldSpec, SpanMode,
};

fn field(q: u64) -> FieldSpec {
    FieldSpec::with_order(q).expect("supported order")
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_paley_hypergraph");
    for q in [11u64, 27, 43] {
        let spec = field(q);
        group.bench_with_input(BenchmarkId::from_parameter(q), &spec, |b, spec| {
            b.iter(|| build_paley_hypergraph(black_box(spec)).unwrap())
        });
    }
    group.finish();
}

fn verifiers(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(20);
    for q in [19u64, 27] {
        let h = build_paley_hypergraph(&field(q)).unwrap();
        group.bench_with_input(BenchmarkId::new("zero_or_two", q), &h, |b, h| {
            b.iter(|| verify_span(black_box(h), SpanMode::ZeroOrTwo))
        });
        group.bench_with_input(BenchmarkId::new("design_t3", q), &h, |b, h| {
            b.iter(|| design_parameters(black_box(h), 3).unwrap())
        });
    }
    group.finish();
}

fn tournaments(c: &mut Criterion) {
    let mut group = c.benchmark_group("baber_hypergraph");
    for q in [19u64, 31] {
        let t = extended_paley_tournament(&field(q)).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(q + 1), &t, |b, t| {
            b.iter(|| baber_hypergraph(black_box(t)))
        });
    }
    group.finish();

    let t = random_tournament(64, 7);
    let subset: Vec<usize> = (0..64).step_by(3).collect();
    let s = switch(&t, &subset).unwrap();
    c.bench_function("switching_equivalent/64", |b| {
        b.iter(|| switching_equivalent(black_box(&t), black_box(&s)).unwrap())
    });
}

fn realize(c: &mut Criterion) {
    let mut group = c.benchmark_group("realize_as_tournament");
    group.sample_size(10);
    for q in [7u64, 11] {
        let h = build_paley_hypergraph(&field(q)).unwrap();
        group.bench_with_input(BenchmarkId::new("paley", q), &h, |b, h| {
            b.iter(|| realize_as_tournament(black_box(h), u64::MAX).unwrap())
        });
    }
    let m = load_m11();
    group.bench_function("m11", |b| {
        b.iter(|| realize_as_tournament(black_box(&m), u64::MAX).unwrap())
    });
    group.finish();
}

criterion_group!(benches, construction, verifiers, tournaments, realize);
criterion_main!(benches);
