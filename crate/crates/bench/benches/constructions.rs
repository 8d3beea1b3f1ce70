use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ramsey_forge::{catalog, coloring, products, solvers, ColoringSpec, Config, EdgeColoring};

/// Block-ready 16-vertex base: the majority neighborhood moved to the
/// front, its color renamed to 1.
fn gf16_block_ready(cfg: &Config) -> EdgeColoring {
    let c16 = catalog::generate_gf16_three_coloring();
    let mn = ramsey_forge::capacity::majority_neighborhood(&c16, cfg).unwrap();
    let mut order = mn.members.clone();
    order.extend((0..16).filter(|v| !mn.members.contains(v)));
    let mut g = c16.induced_subcoloring(&order).unwrap();
    if mn.color != 1 {
        let mut perm: Vec<u16> = (1..=3).collect();
        perm.swap(0, (mn.color - 1) as usize);
        g = g.relabel_colors(&perm).unwrap();
    }
    g
}

fn h5_helper() -> EdgeColoring {
    EdgeColoring::from_fn(5, 3, |u, v| {
        let d = (v - u) % 5;
        if d == 1 || d == 4 {
            2
        } else {
            3
        }
    })
    .unwrap()
}

fn bench_theorem2_281(c: &mut Criterion) {
    let cfg = Config::default();
    let g = gf16_block_ready(&cfg);
    let h = h5_helper();
    c.bench_function("theorem2_construct_281", |b| {
        b.iter(|| {
            products::theorem2_construct(black_box(&g), 5, &h, 3, &cfg)
                .unwrap()
                .vertex_count()
        })
    });
}

fn bench_theorem2_281_with_verification(c: &mut Criterion) {
    let cfg = Config::default();
    let g = gf16_block_ready(&cfg);
    let h = h5_helper();
    let spec = ColoringSpec::uniform(6, 3).unwrap();
    c.bench_function("theorem2_construct_and_verify_281", |b| {
        b.iter(|| {
            let f = products::theorem2_construct(black_box(&g), 5, &h, 3, &cfg).unwrap();
            coloring::validate_coloring(&f, &spec, &cfg).unwrap().pass
        })
    });
}

fn bench_strong_power_cube(c: &mut Criterion) {
    let cfg = Config::default();
    let c5 = catalog::generate_cycle(5).unwrap();
    c.bench_function("graph_power_c5_cubed", |b| {
        b.iter(|| products::graph_power(black_box(&c5), 3, &cfg).unwrap().edge_count())
    });
}

fn bench_emt_pipeline(c: &mut Criterion) {
    let cfg = Config::default();
    let coloring = catalog::generate_k5_two_coloring();
    c.bench_function("emt_bridge_k5", |b| {
        b.iter(|| {
            let graphs = products::emt_product_graphs(black_box(&coloring));
            let product = products::strong_product(&graphs[0], &graphs[1]);
            solvers::max_independent_set(&product, &cfg).unwrap().size
        })
    });
}

criterion_group!(
    benches,
    bench_theorem2_281,
    bench_theorem2_281_with_verification,
    bench_strong_power_cube,
    bench_emt_pipeline
);
criterion_main!(benches);
