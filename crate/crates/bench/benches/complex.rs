use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use glide_core::complex::npc_verdict;
use glide_core::cycles::enumerate_cycles;
use glide_core::dimer::enumerate_dimer_coverings;
use glide_core::{corpus, BuildOptions, DimerModel, Limits};

const GRAPHS: [&str; 4] = ["theta6", "c4_c4", "ladder", "exact_cover"];

fn graphs() -> Vec<(&'static str, glide_core::Hypergraph)> {
    corpus::all()
        .into_iter()
        .filter(|(n, _)| GRAPHS.contains(n))
        .collect()
}

fn cycles(c: &mut Criterion) {
    let mut group = c.benchmark_group("cycles");
    for (name, h) in graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &h, |b, h| {
            b.iter(|| enumerate_cycles(h, Limits::default().max_cycles).unwrap())
        });
    }
    group.finish();
}

fn coverings(c: &mut Criterion) {
    let mut group = c.benchmark_group("coverings");
    for (name, h) in graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &h, |b, h| {
            b.iter(|| enumerate_dimer_coverings(h))
        });
    }
    group.finish();
}

fn complex(c: &mut Criterion) {
    let mut group = c.benchmark_group("dimer_complex");
    for (name, h) in graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &h, |b, h| {
            b.iter(|| DimerModel::new(h.clone(), BuildOptions::default()).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("npc_verdict");
    for (name, h) in graphs() {
        let m = DimerModel::new(h, BuildOptions::default()).unwrap();
        group.bench_function(name, |b| {
            b.iter(|| npc_verdict(m.system(), m.complex().states(), Limits::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, cycles, coverings, complex);
criterion_main!(benches);
