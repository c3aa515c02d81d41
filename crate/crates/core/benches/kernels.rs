use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hopfgraft_core::bundle::BundleTauForm;
use hopfgraft_core::cobordism::{enumerate_cobordant_with, ReportOptions};
use hopfgraft_core::diophantine::{diophantine_report_with, DiophantineOptions};
use hopfgraft_core::k0::{verify_k0an_equality, WitnessBudget};
use hopfgraft_core::torus::HalfPlanePoint;
use hopfgraft_core::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn b0() -> BundleTauForm {
    BundleTauForm::new(HalfPlanePoint::I, -0.5f64.sqrt(), 1.0 / 3f64.sqrt()).unwrap()
}

fn diophantine_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("diophantine_sweep");
    for (name, exec) in MODES {
        let opts = DiophantineOptions {
            exec,
            ..Default::default()
        };
        g.bench_with_input(BenchmarkId::new(name, 100_000), &opts, |bch, o| {
            bch.iter(|| diophantine_report_with(black_box(&b0()), 100_000, o).unwrap())
        });
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_cobordant");
    g.sample_size(10);
    for (name, exec) in MODES {
        let opts = ReportOptions {
            exec,
            ..Default::default()
        };
        g.bench_with_input(BenchmarkId::new(name, 50), &opts, |bch, o| {
            bch.iter(|| enumerate_cobordant_with(black_box(&b0()), 50, o).unwrap())
        });
    }
    g.finish();
}

fn witness_search(c: &mut Criterion) {
    let mut g = c.benchmark_group("k0_witness");
    g.sample_size(10);
    let tf = HalfPlanePoint::new(0.0, 1.5).unwrap();
    for (name, exec) in MODES {
        // a seed deep into the sequence and a large budget keep the search busy
        let budget = WitnessBudget {
            exec,
            seed: 1000,
            n_max: 50_000,
            ..Default::default()
        };
        g.bench_with_input(BenchmarkId::new(name, budget.candidates), &budget, |bch, bud| {
            bch.iter(|| verify_k0an_equality(HalfPlanePoint::I, black_box(tf), bud).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, diophantine_sweep, enumeration, witness_search);
criterion_main!(benches);
