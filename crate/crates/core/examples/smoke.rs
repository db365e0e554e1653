//! Runs the torus strategy on the larger fixtures and prints timings.
fn main() {
    
    use pursuit_core::fixtures;
    use pursuit_core::game::run_match;
    use pursuit_core::robbers::GreedyRobber;
    use pursuit_core::strategies::Toroidal3;
    for (name, emb) in [("c5c5", fixtures::torus_grid(5)), ("petersen", fixtures::petersen_torus())] {
        let t0 = std::time::Instant::now();
        let g = emb.base().clone();
        let cap = Toroidal3::move_cap(&emb).unwrap();
        let mut cops = Toroidal3::new(emb);
        let mut robber = GreedyRobber;
        let trace = run_match(&g, None, &mut cops, &mut robber, 3, cap).unwrap();
        println!("{name}: {:?} in {:?} (cap {cap}, turns {})", trace.outcome, t0.elapsed(), trace.turns.len());
    }
}
