use criterion::{criterion_group, criterion_main, Criterion};
use cyclicity::census;
use cyclicity::constructors::alternating;
use cyclicity::matrix_groups::{psl2, sl2};
use cyclicity::structure::chief_series;

fn census_bench(c: &mut Criterion) {
    let groups = [
        ("A5", alternating(5).unwrap()),
        ("PSL(2,7)", psl2(7).unwrap()),
        ("SL(2,5)", sl2(5).unwrap()),
        ("PSL(2,13)", psl2(13).unwrap()),
    ];
    for (name, g) in &groups {
        c.bench_function(&format!("census {name}"), |b| b.iter(|| census(g)));
    }
}

fn closure_bench(c: &mut Criterion) {
    c.bench_function("close PSL(2,9)", |b| b.iter(|| psl2(9).unwrap()));
    c.bench_function("close A6", |b| b.iter(|| alternating(6).unwrap()));
}

fn chief_bench(c: &mut Criterion) {
    let g = sl2(5).unwrap();
    c.bench_function("chief series SL(2,5)", |b| b.iter(|| chief_series(&g)));
}

criterion_group!(benches, census_bench, closure_bench, chief_bench);
criterion_main!(benches);
