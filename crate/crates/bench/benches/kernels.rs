use criterion::{black_box, criterion_group, criterion_main, Criterion};
use h2plus1d::moments::MomentTable;
use h2plus1d::oracle::solve_spectrum;
use h2plus1d::special::dawson;
use h2plus1d::variational::{epsilon1, epsilon2};
use h2plus1d::Parity;

fn bench_dawson(c: &mut Criterion) {
    c.bench_function("dawson sweep", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            let mut x = 0.01;
            while x < 40.0 {
                acc += dawson(black_box(x));
                x *= 1.05;
            }
            acc
        })
    });
}

fn bench_moments(c: &mut Criterion) {
    c.bench_function("moment table nu=10 n_max=12", |b| {
        b.iter(|| MomentTable::build(black_box(10.0), 12).unwrap())
    });
}

fn bench_energy(c: &mut Criterion) {
    c.bench_function("epsilon1 nu=2.6", |b| b.iter(|| epsilon1(black_box(2.6))));
    c.bench_function("epsilon2 even nu=2.6", |b| {
        b.iter(|| epsilon2(Parity::Even, black_box(2.6)).unwrap())
    });
    c.bench_function("epsilon2 odd nu=9.6", |b| {
        b.iter(|| epsilon2(Parity::Odd, black_box(9.6)).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    c.bench_function("oracle spectrum nu=2.6 N=1000", |b| {
        b.iter(|| solve_spectrum(black_box(2.6), 1000, 1).unwrap())
    });
}

criterion_group!(benches, bench_dawson, bench_moments, bench_energy, bench_oracle);
criterion_main!(benches);
