use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mtheta::catalog::{self, MockThetaId};
use mtheta::density;
use mtheta::exec::{self, ExecMode};
use mtheta::verify::{self, Profile};

const MODES: [(&str, ExecMode); 2] = [
    ("sequential", ExecMode::Sequential),
    ("parallel", ExecMode::Parallel),
];

fn claims(c: &mut Criterion) {
    let mut g = c.benchmark_group("run_all");
    g.sample_size(10).measurement_time(Duration::from_secs(10));
    for (label, depth) in [
        ("depth300", Profile::uniform(300)),
        ("default", Profile::default()),
    ] {
        for (name, mode) in MODES {
            g.bench_with_input(BenchmarkId::new(name, label), &depth, |b, p| {
                b.iter(|| black_box(verify::run_all(p, mode)))
            });
        }
    }
    g.finish();
}

fn table1(c: &mut Criterion) {
    let mut g = c.benchmark_group("table1");
    g.sample_size(10);
    for x in [20_000u64, 100_000] {
        for (name, mode) in MODES {
            g.bench_with_input(BenchmarkId::new(name, x), &x, |b, &x| {
                b.iter(|| black_box(density::table1(x, mode).unwrap()))
            });
        }
    }
    g.finish();
}

fn parity_batch(c: &mut Criterion) {
    let ids = MockThetaId::ALL.to_vec();
    let mut g = c.benchmark_group("parity_all_44");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::new(name, 50_000), |b| {
            b.iter(|| {
                exec::map(mode, &ids, |&id| {
                    catalog::parity(id, 50_000).map(|p| p.count_ones())
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, claims, table1, parity_batch);
criterion_main!(benches);
