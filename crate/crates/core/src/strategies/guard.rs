//! Single-cop controller that makes a shortest path guarded: after a
//! declared turn m, any robber standing on the path is captured on the
//! very next cop half-turn.
//!
//! The cop first teleports (when fibers are available) to get within reach
//! of an anchor vertex x on the path, walks to x, then tracks the robber's
//! shadow — the path vertex at distance min(d(u, robber), D) from the
//! u-end. Once the cop stands on the shadow it mirrors it forever.

use crate::game::CopAction;
use crate::graph::{Graph, VertexId};
use crate::strategies::{bfs_masked, UNREACHED};

#[derive(Debug, Clone)]
pub struct GuardController {
    path: Vec<VertexId>,
    index_on_path: Vec<u32>, // UNREACHED off-path, else index
    /// Shadow metric: distances from the u-end in the robber's arena
    /// (supplied by the caller, who knows the arena's mask).
    dist_from_u: Vec<u32>,
    /// Movement metric: unmasked BFS from the anchor.
    dist_to_x: Vec<u32>,
    x_index: u32,
    pending_teleport: Option<VertexId>,
    reached_x: bool,
    declared_m: Option<u32>,
}

impl GuardController {
    /// `candidates` are the cop's legal teleport targets (its fiber; pass
    /// just the cop's position in the classic game). With `x_slack` the
    /// anchor sits at distance min(D, d(u, robber) + slack) from u — the
    /// teleport game guarantees a candidate within slack of it. Without,
    /// the anchor is the far end of the path, reachable from anywhere.
    ///
    /// `shadow_dist` are BFS distances from `path[0]` measured in the
    /// subgraph the robber is confined to (which must contain the path as
    /// a shortest path); movement uses the whole graph.
    pub fn new(
        graph: &Graph,
        shadow_dist: Vec<u32>,
        path: Vec<VertexId>,
        robber: VertexId,
        candidates: &[VertexId],
        x_slack: Option<u32>,
    ) -> GuardController {
        assert!(!path.is_empty());
        let d_len = (path.len() - 1) as u32;
        let mut index_on_path = vec![UNREACHED; graph.vertex_count()];
        for (i, &v) in path.iter().enumerate() {
            index_on_path[v.idx()] = i as u32;
        }
        let dist_from_u = shadow_dist;
        debug_assert!(
            path.iter().enumerate().all(|(i, v)| dist_from_u[v.idx()] == i as u32),
            "path is not a shortest path of the shadow metric"
        );
        let x_index = match x_slack {
            Some(slack) => {
                let d0 = dist_from_u[robber.idx()];
                assert_ne!(d0, UNREACHED, "robber not in the guard's arena");
                d0.saturating_add(slack).min(d_len)
            }
            None => d_len,
        };
        let x = path[x_index as usize];
        let dist_to_x = bfs_masked(graph, x, |_| true);
        let teleport = candidates
            .iter()
            .copied()
            .min_by_key(|c| (dist_to_x[c.idx()], c.0))
            .expect("nonempty candidate set");
        if let Some(slack) = x_slack {
            debug_assert!(
                dist_to_x[teleport.idx()] <= slack.max(graph.vertex_count() as u32),
                "teleport landing too far from the anchor"
            );
        }
        GuardController {
            path,
            index_on_path,
            dist_from_u,
            dist_to_x,
            x_index,
            pending_teleport: Some(teleport),
            reached_x: false,
            declared_m: None,
        }
    }

    /// Turn from which the path is guarded, once declared.
    /// Internal mode as a hashable key, for state-deduplicated searches
    /// over robber play: (anchor reached, declaration turn).
    pub fn phase_key(&self) -> (bool, Option<u32>) {
        (self.reached_x, self.declared_m)
    }

    pub fn declared(&self) -> Option<u32> {
        self.declared_m
    }

    pub fn path(&self) -> &[VertexId] {
        &self.path
    }

    pub fn anchor_index(&self) -> u32 {
        self.x_index
    }

    /// Shadow of a robber position: clamped path index, or None when the
    /// robber is outside the shadow metric's mask.
    pub fn shadow(&self, robber: VertexId) -> Option<u32> {
        let d = self.dist_from_u[robber.idx()];
        (d != UNREACHED).then(|| d.min((self.path.len() - 1) as u32))
    }

    /// Recompute BFS caches after the arena graph grew (window rebuild).
    /// Vertex ids must be stable; the logical state is preserved.
    pub fn rebuild(&mut self, graph: &Graph, shadow_dist: Vec<u32>) {
        let x = self.path[self.x_index as usize];
        let mut index_on_path = vec![UNREACHED; graph.vertex_count()];
        for (i, &v) in self.path.iter().enumerate() {
            index_on_path[v.idx()] = i as u32;
        }
        self.index_on_path = index_on_path;
        self.dist_from_u = shadow_dist;
        self.dist_to_x = bfs_masked(graph, x, |_| true);
    }

    /// One cop half-turn. `robber` is the robber's current position;
    /// `turn` is the engine turn number this action will create.
    pub fn action(
        &mut self,
        graph: &Graph,
        cop: usize,
        cop_pos: VertexId,
        robber: VertexId,
        turn: u32,
    ) -> CopAction {
        let teleport = self.pending_teleport.take();
        let from = teleport.unwrap_or(cop_pos);
        let teleport_field = teleport.filter(|&t| t != cop_pos);
        if !self.reached_x {
            let x = self.path[self.x_index as usize];
            if from == x {
                self.reached_x = true;
                // fall through to tracking from x
            } else {
                let to = graph
                    .neighbors(from)
                    .iter()
                    .copied()
                    .filter(|n| self.dist_to_x[n.idx()] < self.dist_to_x[from.idx()])
                    .min_by_key(|n| (self.dist_to_x[n.idx()], n.0))
                    .expect("strictly closer neighbor on a geodesic");
                if to == x {
                    self.reached_x = true;
                }
                return CopAction { cop, teleport_to: teleport_field, move_to: to };
            }
        }
        // tracking: step along the path toward the shadow; freeze if the
        // robber has left the shadow metric's arena
        let ci = self.index_on_path[from.idx()];
        debug_assert_ne!(ci, UNREACHED, "tracking cop is on the path");
        let Some(s) = self.shadow(robber) else {
            return CopAction { cop, teleport_to: teleport_field, move_to: from };
        };
        let to_index = match s.cmp(&ci) {
            std::cmp::Ordering::Equal => ci,
            std::cmp::Ordering::Less => ci - 1,
            std::cmp::Ordering::Greater => ci + 1,
        };
        if to_index == s {
            self.declared_m.get_or_insert(turn);
        }
        CopAction {
            cop,
            teleport_to: teleport_field,
            move_to: self.path[to_index as usize],
        }
    }
}
