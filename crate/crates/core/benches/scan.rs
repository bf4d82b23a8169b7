use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use idrad::algebra::KupischShape;
use idrad::checker::scan::{scan_nakayama, scan_radical_square_zero, Execution};
use idrad::checker::CheckOptions;
use idrad::linalg::Field;

fn modes() -> Vec<(&'static str, Execution)> {
    let mut m = vec![("sequential", Execution::Sequential)];
    if cfg!(feature = "parallel") {
        m.push(("parallel", Execution::Parallel));
    }
    m
}

fn nakayama(c: &mut Criterion) {
    let field = Field::new(101).unwrap();
    let opts = CheckOptions::default();
    let mut group = c.benchmark_group("scan_nakayama_cyclic_n4_c6");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| scan_nakayama(&field, KupischShape::Cyclic, 4, 6, &opts, exec).unwrap())
        });
    }
    group.finish();
}

fn radsq(c: &mut Criterion) {
    let field = Field::new(101).unwrap();
    let opts = CheckOptions::default();
    let mut group = c.benchmark_group("scan_radsq_n2");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| scan_radical_square_zero(&field, 2, &opts, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, nakayama, radsq);
criterion_main!(benches);
