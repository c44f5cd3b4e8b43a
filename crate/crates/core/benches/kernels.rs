use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use m1plus::checks::{run_check, CheckConfig};
use m1plus::par::Exec;
use m1plus::vertex::{mode, operator_identity_on_basis, singular_j};
use m1plus::zhu::OSpanBasis;

const PATHS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn o_span(c: &mut Criterion) {
    let mut group = c.benchmark_group("o_span");
    group.sample_size(10);
    for cutoff in [9, 11] {
        for (name, exec) in PATHS {
            group.bench_with_input(BenchmarkId::new(name, cutoff), &cutoff, |b, &w| {
                b.iter(|| OSpanBasis::build(w, exec).rank())
            });
        }
    }
    group.finish();
}

fn commutators(c: &mut Criterion) {
    let mut group = c.benchmark_group("commutators");
    group.sample_size(10);
    for (name, exec) in PATHS {
        let config = CheckConfig { max_weight: 6, exec };
        group.bench_function(name, |b| b.iter(|| run_check("commutators", &config).unwrap().passed()));
    }
    group.finish();
}

fn basis_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("j_mode_basis_sweep");
    let j = singular_j();
    for (name, exec) in PATHS {
        group.bench_function(name, |b| {
            b.iter(|| operator_identity_on_basis(8, true, exec, |v| (mode(&j, 1, v), mode(&j, 1, v))).is_none())
        });
    }
    group.finish();
}

criterion_group!(kernels, o_span, commutators, basis_sweep);
criterion_main!(kernels);
