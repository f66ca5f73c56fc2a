use std::hint::black_box;

use amicable::divisor::SieveConfig;
use amicable::{build_sieve_with, euler_candidate, factorize, find_cycles, search_amicable_with, sigma, Nat, Oracle, SearchConfig};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn sieve(c: &mut Criterion) {
    let mut group = c.benchmark_group("sieve");
    group.sample_size(10);
    for parallel in [false, true] {
        let config = SieveConfig { parallel, ..SieveConfig::default() };
        group.bench_with_input(BenchmarkId::new("1e6", if parallel { "parallel" } else { "serial" }), &config, |b, cfg| {
            b.iter(|| build_sieve_with(black_box(1_000_000), cfg).unwrap())
        });
    }
    group.finish();
}

fn arithmetic(c: &mut Criterion) {
    let m67 = Nat::pow2(67).checked_sub(&Nat::one()).unwrap();
    c.bench_function("sigma 9363584", |b| b.iter(|| sigma(black_box(&Nat::from(9_363_584u64)))));
    c.bench_function("factorize 2^67-1", |b| b.iter(|| factorize(black_box(&m67)).unwrap()));
    c.bench_function("euler candidate (1, 8)", |b| b.iter(|| euler_candidate(black_box(1), black_box(8)).unwrap()));
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    for oracle in [Oracle::Sieve, Oracle::Direct] {
        let config = SearchConfig { oracle, ..SearchConfig::default() };
        group.bench_with_input(BenchmarkId::new("amicable 1e5", format!("{oracle:?}")), &config, |b, cfg| {
            b.iter(|| search_amicable_with(black_box(100_000), cfg).unwrap())
        });
    }
    group.bench_function("cycles 2e4 len 5", |b| b.iter(|| find_cycles(black_box(20_000), 5).unwrap()));
    group.finish();
}

criterion_group!(benches, sieve, arithmetic, searches);
criterion_main!(benches);
