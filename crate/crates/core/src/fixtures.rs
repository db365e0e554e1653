//! Named graph and embedding fixtures used by tests, benchmarks, and the
//! bundled example files.

use crate::cover::TorusEmbedding;
use crate::geom::Point;
use crate::graph::{Graph, VertexId};

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n as u32 - 1));
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// rows x cols grid; vertex (r, c) = r * cols + c.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    let id = |r: usize, c: usize| (r * cols + c) as u32;
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, &edges).unwrap()
}

/// Integer lattice positions for [`grid`], scaled into the unit square with
/// a margin.
pub fn grid_positions(rows: usize, cols: usize) -> Vec<Point> {
    let span = (rows.max(cols)) as f64;
    let mut out = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            out.push(Point::new(
                0.1 + 0.8 * c as f64 / span,
                0.1 + 0.8 * r as f64 / span,
            ));
        }
    }
    out
}

/// Petersen graph in the labeling of the toroidal drawing: vertex 0 is the
/// hub, vertices 1..=9 form the 9-cycle.
pub fn petersen() -> Graph {
    petersen_torus().base().clone()
}

/// Petersen graph torus embedding: hub plus 9-ring in one tile, three ring
/// edges wrapping to neighboring tiles.
pub fn petersen_torus() -> TorusEmbedding {
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut shifts: Vec<((u32, u32), (i64, i64))> = Vec::new();
    // ring a - a+1 (mod 9), ring vertex a is graph vertex a+1
    for a in 0..9u32 {
        edges.push((a + 1, (a + 1) % 9 + 1));
    }
    // spokes to the hub
    for a in [0u32, 3, 6] {
        edges.push((0, a + 1));
    }
    // wrapping chords between ring vertices of neighboring tiles
    edges.push((2, 6)); // ring 1 to ring 5 one tile up
    shifts.push(((2, 6), (0, 1)));
    edges.push((3, 8)); // ring 2 of the right tile to ring 7
    shifts.push(((3, 8), (-1, 0)));
    edges.push((5, 9)); // ring 4 of the upper-right tile to ring 8
    shifts.push(((5, 9), (-1, -1)));
    let mut position = vec![Point::new(0.5, 0.5)];
    for a in 0..9 {
        let ang = (75.0 + 40.0 * a as f64).to_radians();
        position.push(Point::new(
            0.5 + 0.375 * ang.cos(),
            0.5 + 0.375 * ang.sin(),
        ));
    }
    TorusEmbedding::new(Graph::from_edges(10, &edges).unwrap(), position, shifts).unwrap()
}

/// C4 drawn along the equator with one wrapping edge; the cover is a
/// two-way-infinite path.
pub fn c4_ring() -> TorusEmbedding {
    let base = cycle(4);
    let position = vec![
        Point::new(0.1, 0.5),
        Point::new(0.35, 0.5),
        Point::new(0.6, 0.5),
        Point::new(0.85, 0.5),
    ];
    TorusEmbedding::new(base, position, vec![((0, 3), (-1, 0))]).unwrap()
}

/// Torus grid C_n x C_n; vertex (r, c) = r * n + c, wrap edges shifted.
pub fn torus_grid(n: usize) -> TorusEmbedding {
    assert!(n >= 3);
    let id = |r: usize, c: usize| (r * n + c) as u32;
    let mut edges = Vec::new();
    let mut shifts = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let right = (id(r, c), id(r, (c + 1) % n));
            if c + 1 < n {
                edges.push(right);
            } else {
                edges.push(right);
                // edge {id(r,0), id(r,n-1)}: arc from (r,0) going left
                shifts.push(((right.1, right.0), (-1, 0)));
            }
            let up = (id(r, c), id((r + 1) % n, c));
            if r + 1 < n {
                edges.push(up);
            } else {
                edges.push(up);
                shifts.push(((up.1, up.0), (0, -1)));
            }
        }
    }
    let mut position = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            position.push(Point::new(
                (c as f64 + 0.5) / n as f64,
                (r as f64 + 0.5) / n as f64,
            ));
        }
    }
    TorusEmbedding::new(Graph::from_edges(n * n, &edges).unwrap(), position, shifts).unwrap()
}

/// Wraps a planar straight-line drawing into a torus embedding with all
/// shifts zero; the cover is a disjoint union of tile copies.
pub fn one_tile_planar(graph: &Graph, positions: &[Point]) -> TorusEmbedding {
    TorusEmbedding::new(graph.clone(), positions.to_vec(), vec![]).unwrap()
}

/// Dodecahedron graph with a planar drawing: four concentric 5-rings.
/// Ring k holds vertices 5k..5k+4.
pub fn dodecahedron() -> (Graph, Vec<Point>) {
    let mut edges = Vec::new();
    // outer ring 0..4 and inner ring 15..19
    for k in [0u32, 3] {
        for a in 0..5u32 {
            edges.push((5 * k + a, 5 * k + (a + 1) % 5));
        }
    }
    // spokes outer -> second ring, inner -> third ring
    for a in 0..5u32 {
        edges.push((a, 5 + a));
        edges.push((15 + a, 10 + a));
    }
    // zigzag between rings 1 and 2
    for a in 0..5u32 {
        edges.push((5 + a, 10 + a));
        edges.push((5 + (a + 1) % 5, 10 + a));
    }
    let graph = Graph::from_edges(20, &edges).unwrap();
    let mut position = Vec::new();
    let radii = [0.42, 0.30, 0.18, 0.08];
    let offsets = [0.0, 0.0, 36.0, 36.0];
    for k in 0..4 {
        for a in 0..5 {
            let ang = (90.0 + 72.0 * a as f64 + offsets[k]).to_radians();
            position.push(Point::new(
                0.5 + radii[k] * ang.cos(),
                0.5 + radii[k] * ang.sin(),
            ));
        }
    }
    (graph, position)
}

/// Regular polygon drawing for cycles.
pub fn cycle_positions(n: usize) -> Vec<Point> {
    (0..n)
        .map(|i| {
            let ang = std::f64::consts::TAU * i as f64 / n as f64;
            Point::new(0.5 + 0.38 * ang.cos(), 0.5 + 0.38 * ang.sin())
        })
        .collect()
}

/// Straight-line drawing for paths.
pub fn path_positions(n: usize) -> Vec<Point> {
    (0..n)
        .map(|i| Point::new(0.1 + 0.8 * i as f64 / n.max(2) as f64, 0.4 + 0.01 * i as f64))
        .collect()
}

/// Wheel W_n: hub 0 plus an n-cycle 1..=n.
pub fn wheel(n: usize) -> (Graph, Vec<Point>) {
    let mut edges = Vec::new();
    for a in 0..n as u32 {
        edges.push((a + 1, (a + 1) % n as u32 + 1));
        edges.push((0, a + 1));
    }
    let mut position = vec![Point::new(0.5, 0.5)];
    for i in 0..n {
        let ang = std::f64::consts::TAU * i as f64 / n as f64;
        position.push(Point::new(0.5 + 0.38 * ang.cos(), 0.5 + 0.38 * ang.sin()));
    }
    (Graph::from_edges(n + 1, &edges).unwrap(), position)
}

/// Cube graph Q3 drawn as nested squares.
pub fn cube() -> (Graph, Vec<Point>) {
    let edges = [
        (0, 1), (1, 2), (2, 3), (0, 3),
        (4, 5), (5, 6), (6, 7), (4, 7),
        (0, 4), (1, 5), (2, 6), (3, 7),
    ];
    let outer = [
        Point::new(0.1, 0.1),
        Point::new(0.9, 0.1),
        Point::new(0.9, 0.9),
        Point::new(0.1, 0.9),
    ];
    let inner = [
        Point::new(0.3, 0.3),
        Point::new(0.7, 0.3),
        Point::new(0.7, 0.7),
        Point::new(0.3, 0.7),
    ];
    let position = outer.iter().chain(inner.iter()).copied().collect();
    (Graph::from_edges(8, &edges).unwrap(), position)
}

/// Triangular prism drawn as nested triangles.
pub fn prism() -> (Graph, Vec<Point>) {
    let edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];
    let mut position = Vec::new();
    for (r, base) in [(0.42, 0), (0.18, 3)] {
        let _ = base;
        for a in 0..3 {
            let ang = (90.0 + 120.0 * a as f64).to_radians();
            position.push(Point::new(0.5 + r * ang.cos(), 0.5 + r * ang.sin()));
        }
    }
    (Graph::from_edges(6, &edges).unwrap(), position)
}

/// K4 drawn as a triangle with its center.
pub fn k4_planar() -> (Graph, Vec<Point>) {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let position = vec![
        Point::new(0.5, 0.55),
        Point::new(0.5, 0.9),
        Point::new(0.15, 0.2),
        Point::new(0.85, 0.2),
    ];
    (Graph::from_edges(4, &edges).unwrap(), position)
}

/// A small binary-ish tree with a planar drawing.
pub fn tree_fixture() -> (Graph, Vec<Point>) {
    let edges = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (4, 6)];
    let position = vec![
        Point::new(0.5, 0.9),
        Point::new(0.3, 0.6),
        Point::new(0.7, 0.6),
        Point::new(0.15, 0.3),
        Point::new(0.4, 0.3),
        Point::new(0.8, 0.3),
        Point::new(0.45, 0.1),
    ];
    (Graph::from_edges(7, &edges).unwrap(), position)
}

/// Connected planar fixtures up to 12 vertices, each with a crossing-free
/// straight-line drawing. The dodecahedron is kept separate (20 vertices).
#[allow(clippy::vec_init_then_push)]
pub fn planar_corpus() -> Vec<(&'static str, Graph, Vec<Point>)> {
    let mut out: Vec<(&'static str, Graph, Vec<Point>)> = Vec::new();
    out.push(("p2", path_graph(2), path_positions(2)));
    out.push(("p5", path_graph(5), path_positions(5)));
    out.push(("c3", cycle(3), cycle_positions(3)));
    out.push(("c4", cycle(4), cycle_positions(4)));
    out.push(("c6", cycle(6), cycle_positions(6)));
    out.push(("c8", cycle(8), cycle_positions(8)));
    let (g, p) = k4_planar();
    out.push(("k4", g, p));
    let (g, p) = tree_fixture();
    out.push(("tree7", g, p));
    let (g, p) = wheel(5);
    out.push(("w5", g, p));
    let (g, p) = wheel(6);
    out.push(("w6", g, p));
    let (g, p) = prism();
    out.push(("prism", g, p));
    let (g, p) = cube();
    out.push(("cube", g, p));
    out.push(("grid3x3", grid(3, 3), grid_positions(3, 3)));
    out.push(("grid3x4", grid(3, 4), grid_positions(3, 4)));
    out
}

/// All non-isomorphic free trees on 1..=n vertices, as graphs. Generated by
/// leaf extension with AHU canonical-form deduplication.
pub fn all_trees_up_to(n: usize) -> Vec<Graph> {
    let mut all: Vec<Graph> = Vec::new();
    let mut level: Vec<Vec<(u32, u32)>> = vec![vec![]]; // single vertex, no edges
    all.push(Graph::from_edges(1, &[]).unwrap());
    for size in 2..=n {
        let mut next: Vec<Vec<(u32, u32)>> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for tree in &level {
            for attach in 0..(size - 1) as u32 {
                let mut edges = tree.clone();
                edges.push((attach, (size - 1) as u32));
                let g = Graph::from_edges(size, &edges).unwrap();
                if seen.insert(tree_canonical_form(&g)) {
                    all.push(g);
                    next.push(edges);
                }
            }
        }
        level = next;
    }
    all
}

/// AHU canonical form of a free tree, rooted at its center(s).
fn tree_canonical_form(g: &Graph) -> String {
    fn encode(g: &Graph, root: VertexId, parent: Option<VertexId>) -> String {
        let mut subs: Vec<String> = g
            .neighbors(root)
            .iter()
            .filter(|&&c| Some(c) != parent)
            .map(|&c| encode(g, c, Some(root)))
            .collect();
        subs.sort();
        format!("({})", subs.concat())
    }
    centers(g)
        .into_iter()
        .map(|c| encode(g, c, None))
        .min()
        .unwrap()
}

/// Center vertices of a tree (1 or 2), by repeated leaf stripping.
fn centers(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    if n <= 2 {
        return g.vertices().collect();
    }
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<VertexId> = g.vertices().filter(|&v| degree[v.idx()] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v.idx()] = true;
        }
        for &v in &layer {
            for &u in g.neighbors(v) {
                if !removed[u.idx()] {
                    degree[u.idx()] -= 1;
                    if degree[u.idx()] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<VertexId> = if layer.is_empty() {
        g.vertices().filter(|&v| !removed[v.idx()]).collect()
    } else {
        layer
    };
    out.sort_unstable();
    out.dedup();
    out
}
