//! Outer face boundary of a straight-line plane drawing.
//!
//! The rotation system is recovered by sorting each vertex's neighbors by
//! angle; faces are the orbits of the next-dart rule. The walk starts at
//! the lexicographically smallest (x, y) vertex, which is always incident
//! to the unbounded face.

use crate::geom::{segments_conflict, Point, Segment};
use crate::graph::{Graph, VertexId};

/// Pairwise segment check for a straight-line drawing; returns an
/// offending pair if two edges conflict anywhere but a shared endpoint.
/// An undirected edge as an ordered vertex pair.
pub type Edge = (VertexId, VertexId);

pub fn check_planar_drawing(
    graph: &Graph,
    pos: &[Point],
) -> Result<(), (Edge, Edge)> {
    let edges = graph.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        let s1 = Segment { a: pos[a.idx()], b: pos[b.idx()] };
        for &(c, d) in &edges[i + 1..] {
            let s2 = Segment { a: pos[c.idx()], b: pos[d.idx()] };
            if segments_conflict(&s1, &s2) {
                return Err(((a, b), (c, d)));
            }
        }
    }
    Ok(())
}

fn angle(from: Point, to: Point) -> f64 {
    (to.y - from.y).atan2(to.x - from.x)
}

/// Cyclic boundary walk of the unbounded face of the subgraph induced by
/// `keep`, which must be connected and drawn without crossings at `pos`.
/// Darts on the boundary are each traversed once, so bridges appear twice
/// in the walk (once per side).
pub fn outer_face_boundary(
    graph: &Graph,
    pos: &[Point],
    keep: impl Fn(VertexId) -> bool,
) -> Vec<VertexId> {
    // start at the lexicographically smallest position
    let start = graph
        .vertices()
        .filter(|&v| keep(v))
        .min_by(|&a, &b| {
            let (pa, pb) = (pos[a.idx()], pos[b.idx()]);
            pa.x.partial_cmp(&pb.x)
                .unwrap()
                .then(pa.y.partial_cmp(&pb.y).unwrap())
                .then(a.0.cmp(&b.0))
        })
        .expect("nonempty subgraph");
    let nbrs = |v: VertexId| -> Vec<VertexId> {
        let mut ns: Vec<VertexId> = graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| keep(w))
            .collect();
        ns.sort_by(|&a, &b| {
            angle(pos[v.idx()], pos[a.idx()])
                .partial_cmp(&angle(pos[v.idx()], pos[b.idx()]))
                .unwrap()
                .then(a.0.cmp(&b.0))
        });
        ns
    };
    let start_nbrs = nbrs(start);
    if start_nbrs.is_empty() {
        return vec![start];
    }
    // leave by the most counterclockwise dart measured from direction
    // (-1, 0); since start is extreme no neighbor lies at exactly that angle
    let first = *start_nbrs
        .iter()
        .max_by(|&&a, &&b| {
            let rot = |w: VertexId| {
                let t = angle(pos[start.idx()], pos[w.idx()]) - std::f64::consts::PI;
                t.rem_euclid(2.0 * std::f64::consts::PI)
            };
            rot(a).partial_cmp(&rot(b)).unwrap().then(b.0.cmp(&a.0))
        })
        .expect("neighbor exists");
    let mut walk = Vec::new();
    let (mut u, mut v) = (start, first);
    loop {
        walk.push(u);
        // next dart: the neighbor of v just before u in counterclockwise
        // order, tracing the unbounded face
        let ns = nbrs(v);
        let i = ns.iter().position(|&w| w == u).expect("reverse dart");
        let w = ns[(i + ns.len() - 1) % ns.len()];
        u = v;
        v = w;
        if (u, v) == (start, first) {
            break;
        }
    }
    walk
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::Graph;

    #[test]
    fn triangle_boundary_visits_all() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let pos = vec![
            Point { x: 0.0, y: 0.0 },
            Point { x: 1.0, y: 0.0 },
            Point { x: 0.0, y: 1.0 },
        ];
        let walk = outer_face_boundary(&g, &pos, |_| true);
        assert_eq!(walk.len(), 3);
        let mut sorted: Vec<u32> = walk.iter().map(|v| v.0).collect();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2]);
    }

    #[test]
    fn path_boundary_traverses_twice() {
        let g = fixtures::path_graph(4);
        let pos = fixtures::path_positions(4);
        let walk = outer_face_boundary(&g, &pos, |_| true);
        // degenerate face: every edge appears on both sides
        assert_eq!(walk.len(), 6);
        let occurrences = |v: u32| walk.iter().filter(|w| w.0 == v).count();
        assert_eq!(occurrences(0), 1);
        assert_eq!(occurrences(1), 2);
        assert_eq!(occurrences(2), 2);
        assert_eq!(occurrences(3), 1);
    }

    #[test]
    fn grid_boundary_is_the_outer_ring() {
        let g = fixtures::grid(3, 3);
        let pos = fixtures::grid_positions(3, 3);
        let walk = outer_face_boundary(&g, &pos, |_| true);
        // vertex (r,c) = 3r + c; outer ring excludes the center 4
        let mut sorted: Vec<u32> = walk.iter().map(|v| v.0).collect();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3, 5, 6, 7, 8]);
        assert_eq!(walk.len(), 8);
    }

    #[test]
    fn masked_walk_uses_induced_subgraph() {
        let g = fixtures::grid(3, 3);
        let pos = fixtures::grid_positions(3, 3);
        // keep the left 3x2 block: columns 0 and 1
        let keep = |v: VertexId| v.0 % 3 != 2;
        let walk = outer_face_boundary(&g, &pos, keep);
        let mut sorted: Vec<u32> = walk.iter().map(|v| v.0).collect();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 3, 4, 6, 7]);
    }

    #[test]
    fn crossing_detection() {
        // K4 drawn with crossing diagonals
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]).unwrap();
        let pos = vec![
            Point { x: 0.0, y: 0.0 },
            Point { x: 1.0, y: 0.0 },
            Point { x: 1.0, y: 1.0 },
            Point { x: 0.0, y: 1.0 },
        ];
        assert!(check_planar_drawing(&g, &pos).is_err());
        let (k4, good) = fixtures::k4_planar();
        assert!(check_planar_drawing(&k4, &good).is_ok());
    }
}
