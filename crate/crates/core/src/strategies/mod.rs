//! Constructive cop strategies: the guard-path controller, the three-cop
//! planar endgame, and the three-cop strategy on the planar cover of a
//! torus embedding, projected back down to the base graph.

pub mod guard;
pub mod outer_face;
pub mod planar;
pub mod toroidal;

pub use guard::GuardController;
pub use outer_face::{check_planar_drawing, outer_face_boundary};
pub use planar::{Planar3, PlanarTeam};
pub use toroidal::{boundary_rays, choose_d, RaySet, Toroidal3, ToroidalDiag};

use crate::graph::{Graph, VertexId};

pub(crate) const UNREACHED: u32 = u32::MAX;

/// BFS restricted to vertices allowed by `keep`, with the same smallest-id
/// parent convention as [`crate::graph::bfs`].
pub(crate) fn bfs_masked(
    graph: &Graph,
    src: VertexId,
    keep: impl Fn(VertexId) -> bool,
) -> Vec<u32> {
    let mut dist = vec![UNREACHED; graph.vertex_count()];
    debug_assert!(keep(src));
    dist[src.idx()] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(src);
    while let Some(v) = queue.pop_front() {
        for &w in graph.neighbors(v) {
            if dist[w.idx()] == UNREACHED && keep(w) {
                dist[w.idx()] = dist[v.idx()] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}


/// Flood fill of the component of `start` in the graph minus `blocked`.
pub(crate) fn component_of(
    graph: &Graph,
    start: VertexId,
    blocked: impl Fn(VertexId) -> bool,
) -> Vec<VertexId> {
    debug_assert!(!blocked(start));
    let mut seen = vec![false; graph.vertex_count()];
    seen[start.idx()] = true;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(start);
    let mut out = vec![start];
    while let Some(v) = queue.pop_front() {
        for &w in graph.neighbors(v) {
            if !seen[w.idx()] && !blocked(w) {
                seen[w.idx()] = true;
                out.push(w);
                queue.push_back(w);
            }
        }
    }
    out
}
