use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};
use hallshuffle::shuffle::{clear_memo, gen_H, gen_Pbar, shuffle_mul};
use hallshuffle::symfunc::{basis_convert, phi_slope, Basis};
use hallshuffle::SlopeParams;
use hallshuffle_bench::{expr, h, sbar};

fn generators(c: &mut Criterion) {
    let mut g = c.benchmark_group("gen");
    g.sample_size(10);
    for n in 2..=4usize {
        g.bench_with_input(BenchmarkId::new("H", n), &n, |b, &n| b.iter_batched(clear_memo, |_| gen_H(1, n).unwrap(), BatchSize::PerIteration));
    }
    g.bench_function("Pbar(1,1,3)", |b| b.iter_batched(clear_memo, |_| gen_Pbar(SlopeParams { m: 1, n: 1, d: 3 }).unwrap(), BatchSize::PerIteration));
    g.finish();
}

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("shuffle_mul");
    g.sample_size(10);
    let (a, b2) = (h(0, 1), h(1, 2));
    g.bench_function("1x2", |b| b.iter(|| shuffle_mul(&a, &b2).unwrap()));
    let s = sbar(1, 2, 1);
    g.bench_function("2x2", |b| b.iter(|| shuffle_mul(&s, &s).unwrap()));
    g.finish();
}

fn symmetric_functions(c: &mut Criterion) {
    let mut g = c.benchmark_group("symfunc");
    g.sample_size(10);
    let f = expr("ebar[2]*hbar[1] + pbar[3]");
    g.bench_function("phi_1/1 degree 3", |b| b.iter_batched(clear_memo, |_| phi_slope(1, 1, &f).unwrap(), BatchSize::PerIteration));
    let big = expr("hbar[3]*ebar[2] + pbar[5] + ribbon[+-+-]");
    for basis in [Basis::Ebar, Basis::Hbar] {
        g.bench_function(format!("convert to {}", basis.name()), |b| b.iter(|| basis_convert(&big, basis)));
    }
    g.finish();
}

criterion_group!(benches, generators, products, symmetric_functions);
criterion_main!(benches);
