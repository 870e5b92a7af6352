use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ikg::graph::enumerate_graphs;
use ikg::harness::{conjecture_check, run_suite, SuiteOptions};
use ikg::par::Exec;

fn sweeps(c: &mut Criterion) {
    let six = enumerate_graphs(6, None).unwrap();
    let seven = enumerate_graphs(7, None).unwrap();
    let opts = SuiteOptions::default();
    let execs = [("serial", Exec::serial()), ("parallel", Exec::parallel(0))];

    let mut group = c.benchmark_group("theorem-suite-n6");
    group.sample_size(10);
    for (name, exec) in execs {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| run_suite("bench", Some(6), &six, &opts, exec))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("conjecture-n7");
    group.sample_size(10);
    for (name, exec) in execs {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| conjecture_check(&seven, Some(7), exec))
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
