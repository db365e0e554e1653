//! Cross-validates the retrograde solver against the dismantlability
//! characterization of one-cop-win graphs: a connected graph is 1-cop-win
//! iff it can be emptied by repeatedly deleting dominated vertices. The
//! two computations share no code.

use pursuit_core::fixtures;
use pursuit_core::graph::Graph;
use pursuit_core::solver::{is_dismantlable, solve_game};

fn one_cop_win(g: &Graph) -> bool {
    solve_game(g, 1).unwrap().is_cop_win()
}

/// Every connected labeled graph on up to 5 vertices.
fn connected_graphs_up_to_5() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=5usize {
        let pairs: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let dm = pursuit_core::graph::bfs(&g, pursuit_core::graph::VertexId(0));
            if g.vertices().all(|v| dm.reachable(v)) {
                out.push(g);
            }
        }
    }
    out
}

#[test]
fn solver_agrees_with_dismantlability_on_all_small_graphs() {
    let graphs = connected_graphs_up_to_5();
    // 1 + 1 + 4 + 38 + 728 connected labeled graphs on 1..=5 vertices
    assert_eq!(graphs.len(), 772);
    for (i, g) in graphs.iter().enumerate() {
        assert_eq!(
            is_dismantlable(g),
            one_cop_win(g),
            "oracles disagree on graph #{i} ({} vertices, {} edges)",
            g.vertex_count(),
            g.edge_count()
        );
    }
}

#[test]
fn solver_agrees_with_dismantlability_on_named_fixtures() {
    let named: Vec<(&str, Graph)> = vec![
        ("petersen", fixtures::petersen()),
        ("dodecahedron", fixtures::dodecahedron().0),
        ("grid4x4", fixtures::grid(4, 4)),
        ("cycle6", fixtures::cycle(6)),
        ("wheel6", fixtures::wheel(6).0),
        ("k4", fixtures::k4_planar().0),
    ];
    for (name, g) in &named {
        assert_eq!(is_dismantlable(g), one_cop_win(g), "oracles disagree on {name}");
    }
    for (i, t) in fixtures::all_trees_up_to(9).iter().enumerate() {
        assert!(is_dismantlable(t), "tree #{i} must be dismantlable");
        assert!(one_cop_win(t), "tree #{i} must be one-cop-win");
    }
}
