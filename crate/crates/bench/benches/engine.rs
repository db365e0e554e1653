//! Benchmarks for the engine's hot paths: BFS, the exact solver, cover
//! window construction, and a full toroidal match.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use pursuit_core::cover::{build_cover_window, DEFAULT_WINDOW_BUDGET};
use pursuit_core::fixtures;
use pursuit_core::game::run_match;
use pursuit_core::graph::{bfs, VertexId};
use pursuit_core::robbers::GreedyRobber;
use pursuit_core::solver::solve_game;
use pursuit_core::strategies::Toroidal3;

fn bench_bfs(c: &mut Criterion) {
    let emb = fixtures::petersen_torus();
    let window = build_cover_window(&emb, VertexId(0), 60, DEFAULT_WINDOW_BUDGET).unwrap();
    let g = window.graph().clone();
    c.bench_function("bfs_petersen_window_r60", |b| {
        b.iter(|| bfs(black_box(&g), VertexId(0)))
    });
}

fn bench_solver(c: &mut Criterion) {
    let g = fixtures::petersen();
    c.bench_function("solve_petersen_k3", |b| {
        b.iter(|| solve_game(black_box(&g), 3).unwrap())
    });
}

fn bench_window(c: &mut Criterion) {
    let emb = fixtures::petersen_torus();
    c.bench_function("build_petersen_window_r40", |b| {
        b.iter(|| build_cover_window(black_box(&emb), VertexId(0), 40, DEFAULT_WINDOW_BUDGET).unwrap())
    });
}

fn bench_match(c: &mut Criterion) {
    let emb = fixtures::torus_grid(4);
    let g = emb.base().clone();
    let cap = Toroidal3::move_cap(&emb).unwrap();
    c.bench_function("toroidal_match_c4c4_vs_greedy", |b| {
        b.iter(|| {
            let mut cops = Toroidal3::new(emb.clone());
            let mut robber = GreedyRobber;
            run_match(black_box(&g), None, &mut cops, &mut robber, 3, cap).unwrap()
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_bfs, bench_solver, bench_window, bench_match
}
criterion_main!(benches);
