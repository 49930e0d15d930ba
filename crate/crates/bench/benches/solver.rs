use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use punctile_core::solver::{build_string_instance, Search};
use punctile_core::{build_tile_instance, solve, Region, TorusShape};
use std::hint::black_box;

fn tile_tori(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve_tile_torus");
    for (k, side) in [(1, 4), (2, 8), (3, 6)] {
        let inst = build_tile_instance(k, &Region::Torus(TorusShape::new(vec![side, side]).unwrap())).unwrap();
        g.bench_with_input(BenchmarkId::new(format!("k{k}"), side), &inst, |b, inst| {
            b.iter(|| solve(black_box(inst), None))
        });
    }
    g.finish();
}

fn string_holes(c: &mut Criterion) {
    let inst = build_string_instance(3, &TorusShape::new(vec![4, 4]).unwrap()).unwrap();
    c.bench_function("count_string_covers_k3_minus_point", |b| {
        b.iter(|| {
            let holed = inst.without_cells(&[vec![1, 2]]);
            Search::new(black_box(&holed)).count(u64::MAX).unwrap()
        })
    });
}

criterion_group!(benches, tile_tori, string_holes);
criterion_main!(benches);
