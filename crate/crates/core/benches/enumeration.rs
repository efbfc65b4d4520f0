use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use svcurves::curvecat::{count_points, PlaneCurveModel};
use svcurves::ovoid::ovoid_points;
use svcurves::veritas::{run_suite, Suite, SuiteOptions};
use svcurves::ExecMode;

const MODES: [(&str, ExecMode); 2] = [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)];

fn counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_points");
    group.sample_size(10);
    let cases = [
        ("suzuki1-m4", PlaneCurveModel::suzuki(1).unwrap(), 4),
        ("hermitian5-m2", PlaneCurveModel::hermitian(5).unwrap(), 2),
        ("suzuki2-m3", PlaneCurveModel::suzuki(2).unwrap(), 3),
    ];
    for (name, curve, m) in &cases {
        for (label, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(label, name), m, |b, &m| {
                b.iter(|| black_box(count_points(curve, m, mode).unwrap()))
            });
        }
    }
    group.finish();
}

fn ovoid(c: &mut Criterion) {
    let mut group = c.benchmark_group("ovoid_points");
    group.sample_size(10);
    for (label, mode) in MODES {
        group.bench_function(BenchmarkId::new(label, "s2"), |b| b.iter(|| black_box(ovoid_points(2, mode).unwrap().len())));
    }
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_suite");
    group.sample_size(10);
    for (label, mode) in MODES {
        let opts = SuiteOptions { unsafe_cap: false, mode };
        group.bench_function(BenchmarkId::new(label, "suzuki1"), |b| {
            b.iter(|| black_box(run_suite(Suite::Suzuki { s: 1 }, &opts).unwrap().len()))
        });
    }
    group.finish();
}

criterion_group!(benches, counts, ovoid, suites);
criterion_main!(benches);
