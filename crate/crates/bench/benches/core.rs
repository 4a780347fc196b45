use criterion::{criterion_group, criterion_main, Criterion};

use psilab_bench::{general_f, general_quotient, prime, rationals};
use psilab_core::equivariant::{equivariant_tors, restriction_decomposition, CharacterTable};
use psilab_core::homology::{koszul_betti, resolve_k_over_a};
use psilab_core::linrel::{build_full_system, relation_report};
use psilab_core::partitions::Partition;
use psilab_core::psi::{build_construction_f, orbit_span, TParams};

fn orbit(c: &mut Criterion) {
    let q = rationals();
    let f = general_f(&q, 6, 3, 1);
    c.bench_function("orbit_span n=6 d=3 (q)", |b| b.iter(|| orbit_span(&f).unwrap()));
    let fp = prime();
    let g = build_construction_f(&fp, 3, None).unwrap().f;
    let mut group = c.benchmark_group("construction");
    group.sample_size(10);
    group.bench_function("orbit_span n=26 d=3 (fp)", |b| b.iter(|| orbit_span(&g).unwrap()));
    group.finish();
}

fn betti(c: &mut Criterion) {
    let q = rationals();
    let a = general_quotient(&q, 5, 3, 7);
    let m = a.to_module(false).unwrap();
    c.bench_function("koszul_betti n=5 d=3 (q)", |b| b.iter(|| koszul_betti(&m).unwrap()));
    let fp = prime();
    let a8 = general_quotient(&fp, 8, 4, 1);
    let m8 = a8.to_module(false).unwrap();
    let mut group = c.benchmark_group("large");
    group.sample_size(10);
    group.bench_function("koszul_betti n=8 d=4 (fp)", |b| b.iter(|| koszul_betti(&m8).unwrap()));
    let a5 = general_quotient(&fp, 5, 3, 1);
    group.bench_function("resolve k over A n=5 d=3, i<=4 (fp)", |b| b.iter(|| resolve_k_over_a(&a5, 4, 400_000_000).unwrap()));
    group.finish();
}

fn relations(c: &mut Criterion) {
    let q = rationals();
    let t = TParams::random(&q, 5, 31, 1, 1000);
    c.bench_function("full relation system n=10 d=5 (q)", |b| b.iter(|| build_full_system(&t, 10).unwrap().solution_dim()));
    c.bench_function("relation report n=7 d=4 (q)", |b| {
        let t4 = TParams::random(&q, 4, 31, 1, 1000);
        b.iter(|| relation_report(&t4, 7).unwrap())
    });
}

fn characters(c: &mut Criterion) {
    let fp = prime();
    let a = general_quotient(&fp, 5, 2, 1);
    let m = a.to_module(true).unwrap();
    c.bench_function("equivariant Tor n=5 d=2 (fp)", |b| b.iter(|| equivariant_tors(&m).unwrap()));
    let table = CharacterTable::new(10);
    let l = Partition::new(vec![3, 2, 1]).unwrap();
    c.bench_function("restriction S_(3,2,1) to S_10", |b| b.iter(|| restriction_decomposition(&l, 10, &table).unwrap()));
    c.bench_function("character table S_10", |b| b.iter(|| CharacterTable::new(10)));
}

criterion_group!(benches, orbit, betti, relations, characters);
criterion_main!(benches);
