use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use glspace::abs_sums::{build_e_sum, validate_absolute};
use glspace::corpus::{fixture, polygon_corpus};
use glspace::gl::is_gl_with;
use glspace::normed::PolyhedralSpace;
use glspace::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn corpus_sweep(c: &mut Criterion) {
    let spaces: Vec<PolyhedralSpace> = polygon_corpus(40, 7)
        .unwrap()
        .into_iter()
        .map(PolyhedralSpace::new)
        .collect();
    let mut group = c.benchmark_group("polygon_corpus_gl");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("corpus_level", name), |b| {
            b.iter(|| {
                exec.map(&spaces, |x| is_gl_with(x, Execution::Sequential).unwrap().is_gl)
                    .into_iter()
                    .filter(|&g| g)
                    .count()
            })
        });
    }
    group.finish();
}

fn sum_check(c: &mut Criterion) {
    let outer = validate_absolute(fixture("hex_tilde").unwrap()).unwrap();
    let comps = [
        PolyhedralSpace::new(fixture("square").unwrap()),
        PolyhedralSpace::new(fixture("hex_tilde").unwrap()),
    ];
    let sum = build_e_sum(&outer, &comps).unwrap();
    let mut group = c.benchmark_group("sum_gl");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("facet_level", name), |b| {
            b.iter(|| is_gl_with(sum.space(), exec).unwrap().is_gl)
        });
    }
    group.finish();
}

criterion_group!(benches, corpus_sweep, sum_check);
criterion_main!(benches);
