use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use splitsolv::classify::classify;
use splitsolv::coframe::{splitting_coframe, SplittingParams};
use splitsolv::metrics::{certificates, exists_metric, MetricKind};
use splitsolv::nakamura::{build_complexes, NakamuraParams};
use splitsolv::{certificate, DoubleComplex, ExactMatrix, GaussianRational as G, Theory};

fn g(s: &str) -> G {
    G::parse(s).unwrap()
}

fn linear_algebra(c: &mut Criterion) {
    let m = ExactMatrix::from_fn(12, 12, |i, j| G::from_ints(((i * 7 + j * 3) % 5) as i64 - 2, ((i + 2 * j) % 3) as i64 - 1));
    c.bench_function("rank 12x12 gaussian", |b| b.iter(|| black_box(&m).rank()));
    c.bench_function("kernel 12x12 gaussian", |b| b.iter(|| black_box(&m).kernel_basis()));
}

fn structures(c: &mut Criterion) {
    let p = SplittingParams::c2(g("1/2+i"), g("-1/3+2i"), 1);
    c.bench_function("classify C2", |b| b.iter(|| classify(black_box(&p)).unwrap()));
    let cf = splitting_coframe(&p);
    c.bench_function("metric certificates", |b| b.iter(|| certificates(black_box(&cf)).unwrap()));
    c.bench_function("balanced existence", |b| b.iter(|| exists_metric(MetricKind::Balanced, black_box(&cf)).unwrap()));
    c.bench_function("invariant Bott-Chern", |b| b.iter(|| DoubleComplex::from_coframe(black_box(&cf)).unwrap().cohomology(Theory::BottChern)));
}

fn nakamura(c: &mut Criterion) {
    let mut group = c.benchmark_group("nakamura");
    group.sample_size(10);
    let p0 = NakamuraParams::new(g("i"), g("0")).unwrap();
    let pt = NakamuraParams::new(g("i"), g("1/2")).unwrap();
    group.bench_function("complexes t=0", |b| b.iter(|| build_complexes(black_box(&p0)).unwrap()));
    let nc = build_complexes(&pt).unwrap();
    group.bench_function("Bott-Chern t=1/2", |b| b.iter(|| black_box(&nc).cohomology(Theory::BottChern)));
    group.bench_function("ddbar witness t=0", |b| {
        let nc0 = build_complexes(&p0).unwrap();
        b.iter(|| black_box(&nc0).c.ddbar_witness())
    });
    group.finish();
}

fn lattice(c: &mut Criterion) {
    c.bench_function("lattice certificate s=-1 n=6", |b| b.iter(|| certificate(black_box(-1), black_box(6)).unwrap()));
}

criterion_group!(benches, linear_algebra, structures, nakamura, lattice);
criterion_main!(benches);
