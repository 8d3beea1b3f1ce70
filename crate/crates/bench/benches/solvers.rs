use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, Criterion};
use ramsey_forge::{catalog, coloring, products, solvers, ColoringSpec, Config};

fn bench_alpha_pentagon_square(c: &mut Criterion) {
    let cfg = Config::default();
    let c5 = catalog::generate_cycle(5).unwrap();
    let square = products::graph_power(&c5, 2, &cfg).unwrap();
    c.bench_function("alpha_c5_power2", |b| {
        b.iter(|| solvers::max_independent_set(black_box(&square), &cfg).unwrap().size)
    });
}

fn bench_alpha_pentagon_cube(c: &mut Criterion) {
    let cfg = Config::default();
    let c5 = catalog::generate_cycle(5).unwrap();
    let cube = products::graph_power(&c5, 3, &cfg).unwrap();
    let mut group = c.benchmark_group("alpha_c5_power3");
    group.sample_size(10).measurement_time(Duration::from_secs(20));
    group.bench_function("branch_and_bound", |b| {
        b.iter(|| solvers::max_independent_set(black_box(&cube), &cfg).unwrap().size)
    });
    group.finish();
}

fn bench_exhaustive_ramsey(c: &mut Criterion) {
    let cfg = Config::default();
    c.bench_function("exhaustive_ramsey_6_2_3", |b| {
        b.iter(|| solvers::exhaustive_ramsey_check(black_box(6), 2, 3, &cfg).unwrap())
    });
}

fn bench_validate_gf16(c: &mut Criterion) {
    let cfg = Config::default();
    let coloring = catalog::generate_gf16_three_coloring();
    let spec = ColoringSpec::uniform(3, 3).unwrap();
    c.bench_function("validate_gf16_3_3_3", |b| {
        b.iter(|| {
            coloring::validate_coloring(black_box(&coloring), &spec, &cfg)
                .unwrap()
                .pass
        })
    });
}

criterion_group!(
    benches,
    bench_alpha_pentagon_square,
    bench_alpha_pentagon_cube,
    bench_exhaustive_ramsey,
    bench_validate_gf16
);
criterion_main!(benches);
