use criterion::{criterion_group, criterion_main, Criterion};
use hallshuffle::affine::{bfs_lengths, parse_word};

fn affine(c: &mut Criterion) {
    let v = parse_word(6, "s0 s1 s2 s3 s4 s5 s0 s2 s4 w^2 s1 s3").unwrap();
    c.bench_function("length n=6", |b| b.iter(|| v.length()));
    c.bench_function("reduced word n=6", |b| b.iter(|| v.reduced_word()));
    c.bench_function("cycle data n=6", |b| b.iter(|| v.cycle_data()));
    let u = parse_word(4, "s1 s2 s3").unwrap();
    let w = parse_word(4, "s0 s1 s2 s3 s0 s1 s2").unwrap();
    c.bench_function("bruhat n=4", |b| b.iter(|| u.bruhat_leq(&w).unwrap()));
    c.bench_function("bfs n=3 depth 6", |b| b.iter(|| bfs_lengths(3, 6)));
}

criterion_group!(benches, affine);
criterion_main!(benches);
