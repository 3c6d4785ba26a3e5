use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use daha_core::combinat::{lambda_family, SingularParams};
use daha_core::daha::check_daha_relations_with;
use daha_core::exec::Execution;
use daha_core::jack::{shifted_jack, Method};
use daha_core::qkz::{build_solution_with, verify_cyclic_with, verify_exchange_with, QkzParams};

const MODES: [(&str, Execution); 2] = [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)];

fn relations(c: &mut Criterion) {
    let mut g = c.benchmark_group("relations_n3_deg3");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| check_daha_relations_with(3, 3, exec)));
    }
    g.finish();
}

fn qkz(c: &mut Criterion) {
    let p = SingularParams::new(2, 2, 0, 3, 0).unwrap();
    let d = [3, 3];
    // Warm the Jack memo so the timings measure the fan-out itself.
    shifted_jack(&lambda_family(&p).unwrap(), Method::ViaPhi).unwrap();
    let f = build_solution_with(&p, &d, Execution::Sequential).unwrap();
    let params = QkzParams::trivial(p.kappa0(), 2).unwrap();

    let mut g = c.benchmark_group("qkz_n6");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new("build", name), |b| b.iter(|| build_solution_with(&p, &d, exec).unwrap()));
        g.bench_function(BenchmarkId::new("verify", name), |b| {
            b.iter(|| (verify_exchange_with(&f, exec), verify_cyclic_with(&f, &params, exec)))
        });
    }
    g.finish();
}

criterion_group!(benches, relations, qkz);
criterion_main!(benches);
