use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use trix_bench::{all_queries, patterns, scripts, workloads};
use trix_core::{Comparisons, Index};

fn build(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    g.sample_size(10);
    for (name, t) in workloads() {
        g.throughput(Throughput::Elements(t.node_count() as u64));
        g.bench_with_input(BenchmarkId::from_parameter(&name), &t, |b, t| b.iter(|| Index::build(black_box(t))));
    }
    g.finish();
}

fn wlinks(c: &mut Criterion) {
    let mut g = c.benchmark_group("wlink-sweep");
    for (name, t) in workloads() {
        let idx = Index::build(&t);
        let queries = all_queries(&idx);
        g.throughput(Throughput::Elements(queries.len() as u64));
        g.bench_function(&name, |b| {
            b.iter(|| {
                let mut probes = Comparisons::default();
                let st = idx.suffix_tree();
                queries.iter().filter(|&&(v, a)| idx.wlinks().query(st, v, a, &mut probes).unwrap().is_some()).count()
            })
        });
    }
    g.finish();
}

fn dawg(c: &mut Criterion) {
    let mut g = c.benchmark_group("dawg-transitions");
    for (name, t) in workloads() {
        let idx = Index::build(&t);
        let d = idx.dawg();
        let queries = all_queries(&idx);
        g.throughput(Throughput::Elements(queries.len() as u64));
        g.bench_function(&name, |b| {
            b.iter(|| queries.iter().filter(|&&(v, a)| d.transition(v, a).unwrap().is_some()).count())
        });
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("search");
    for (name, t) in workloads() {
        let idx = Index::build(&t);
        let pats = patterns(&t, 500, 16);
        let scripts = scripts(&pats);
        g.throughput(Throughput::Elements(pats.len() as u64));
        g.bench_function(BenchmarkId::new("count", &name), |b| {
            b.iter(|| pats.iter().map(|p| idx.count(black_box(p)).unwrap()).sum::<usize>())
        });
        g.bench_function(BenchmarkId::new("bidi", &name), |b| {
            b.iter(|| scripts.iter().map(|s| idx.run_script(black_box(s)).unwrap().len()).sum::<usize>())
        });
    }
    g.finish();
}

criterion_group!(benches, build, wlinks, dawg, search);
criterion_main!(benches);
