//! Three-cop endgame on a plane-drawn arena.
//!
//! The team maintains two guarded paths P and Q on the outer boundary of
//! the robber's territory R and shrinks the territory iteratively:
//! endpoints of a path that lie on the other path or have no neighbour in
//! R are trimmed; when one path is empty, a free cop is parked on a
//! boundary vertex; when both are nonempty and disjoint, a shortest path S
//! between their leading endpoints is guarded and the robber is confined
//! to its side of S, releasing one of the old guards. The progress
//! measure (|R|, |P|+|Q|+|R|) never increases and strictly decreases
//! whenever both paths were nonempty, so the territory collapses and the
//! robber is caught.

use crate::game::{
    CopAction, CopStrategy, GameError, GameState, MatchContext, Player, TurnRecord,
};
use crate::geom::Point;
use crate::graph::{Graph, VertexId};
use crate::strategies::guard::GuardController;
use crate::strategies::outer_face::outer_face_boundary;
use crate::strategies::{component_of, UNREACHED};

fn fault(msg: impl Into<String>) -> GameError {
    GameError::StrategyFault { player: Player::Cops, msg: msg.into() }
}

/// BFS within `keep`, with at most one (undirected) edge removed.
fn bfs_cut(
    graph: &Graph,
    src: VertexId,
    keep: impl Fn(VertexId) -> bool,
    cut: Option<(VertexId, VertexId)>,
) -> Vec<u32> {
    let blocked = |a: VertexId, b: VertexId| match cut {
        Some((x, y)) => (a == x && b == y) || (a == y && b == x),
        None => false,
    };
    let mut dist = vec![UNREACHED; graph.vertex_count()];
    debug_assert!(keep(src));
    dist[src.idx()] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(src);
    while let Some(v) = queue.pop_front() {
        for &w in graph.neighbors(v) {
            if dist[w.idx()] == UNREACHED && keep(w) && !blocked(v, w) {
                dist[w.idx()] = dist[v.idx()] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Reads a shortest path off a BFS distance array, smallest-id-first.
fn backtrack_path(graph: &Graph, dist: &[u32], dst: VertexId) -> Vec<VertexId> {
    let mut path = vec![dst];
    let mut cur = dst;
    while dist[cur.idx()] != 0 {
        let d = dist[cur.idx()];
        let prev = graph
            .neighbors(cur)
            .iter()
            .copied()
            .find(|w| dist[w.idx()] != UNREACHED && dist[w.idx()] + 1 == d)
            .expect("BFS predecessor");
        path.push(prev);
        cur = prev;
    }
    path.reverse();
    path
}

/// First vertex of `path` when it is oriented along the cyclic boundary
/// walk: the endpoint whose outgoing path edge appears as a consecutive
/// pair in the walk, earliest occurrence deciding.
fn oriented_first(walk: &[VertexId], path: &[VertexId]) -> Option<VertexId> {
    if path.len() == 1 {
        return Some(path[0]);
    }
    let (e0, e1) = (path[0], path[path.len() - 1]);
    let n = walk.len();
    for i in 0..n {
        let v = walk[i];
        let w = walk[(i + 1) % n];
        if v == e0 && w == path[1] {
            return Some(e0);
        }
        if v == e1 && w == path[path.len() - 2] {
            return Some(e1);
        }
    }
    None
}

enum Task {
    Idle,
    Guard(GuardController),
}

enum Pending {
    /// Next cop turn, decide the next sub-goal.
    Plan,
    /// A cop is walking to `target`; once it sits there the robber's
    /// territory is re-cut through the parked vertex.
    Park { slot: usize, target: VertexId, new_p: Vec<VertexId> },
    /// A cop is establishing a guard of the separator path `s`; once
    /// declared, the territory is re-cut along `s` and one guard is freed.
    GuardSep { slot: usize, s: Vec<VertexId>, p_first: VertexId, q_first: VertexId },
}

/// The endgame team. It always controls exactly three cops (0, 1, 2).
pub struct PlanarTeam {
    pos: Vec<Point>,
    tasks: [Task; 3],
    /// Bookkeeping paths; guards keep guarding the full paths they were
    /// built with, of which these are contiguous subpaths.
    p: Vec<VertexId>,
    q: Vec<VertexId>,
    p_slot: Option<usize>,
    q_slot: Option<usize>,
    region: Vec<bool>,
    region_size: usize,
    pending: Pending,
    measures: Vec<(usize, usize)>,
    initialized: bool,
}

impl PlanarTeam {
    /// Team that initialises itself on its first turn with P = the vertex
    /// cop 0 stands on and Q empty.
    pub fn new(pos: Vec<Point>) -> PlanarTeam {
        PlanarTeam {
            pos,
            tasks: [Task::Idle, Task::Idle, Task::Idle],
            p: Vec::new(),
            q: Vec::new(),
            p_slot: None,
            q_slot: None,
            region: Vec::new(),
            region_size: 0,
            pending: Pending::Plan,
            measures: Vec::new(),
            initialized: false,
        }
    }

    /// Team taking over mid-game: `p`/`q` already guarded (controllers
    /// declared) by the given cops, robber confined to `region`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_handoff(
        pos: Vec<Point>,
        p: Vec<VertexId>,
        p_slot: usize,
        p_ctrl: GuardController,
        q: Vec<VertexId>,
        q_guard: Option<(usize, GuardController)>,
        region: Vec<bool>,
    ) -> PlanarTeam {
        let mut tasks = [Task::Idle, Task::Idle, Task::Idle];
        tasks[p_slot] = Task::Guard(p_ctrl);
        let q_slot = q_guard.as_ref().map(|&(s, _)| s);
        if let Some((s, ctrl)) = q_guard {
            tasks[s] = Task::Guard(ctrl);
        }
        let region_size = region.iter().filter(|&&b| b).count();
        let measures = vec![(region_size, p.len() + q.len() + region_size)];
        PlanarTeam {
            pos,
            tasks,
            p,
            q,
            p_slot: Some(p_slot),
            q_slot,
            region,
            region_size,
            pending: Pending::Plan,
            measures,
            initialized: true,
        }
    }

    /// Progress measures (|R|, |P|+|Q|+|R|) recorded at start and after
    /// each completed iteration.
    pub fn measures(&self) -> &[(usize, usize)] {
        &self.measures
    }

    fn in_region(&self, v: VertexId) -> bool {
        self.region.get(v.idx()).copied().unwrap_or(false)
    }

    fn push_measure(&mut self, strict: bool) -> Result<(), GameError> {
        let m = (self.region_size, self.p.len() + self.q.len() + self.region_size);
        if let Some(&(r0, s0)) = self.measures.last() {
            if m.0 > r0 || m.1 > s0 {
                return Err(fault(format!(
                    "progress measure increased: {:?} after {:?}",
                    m,
                    (r0, s0)
                )));
            }
            if strict && m.0 >= r0 && m.1 >= s0 {
                return Err(fault(format!(
                    "progress measure stalled: {:?} after {:?}",
                    m,
                    (r0, s0)
                )));
            }
        }
        self.measures.push(m);
        Ok(())
    }

    fn set_region(&mut self, graph: &Graph, comp: &[VertexId]) {
        let mut mask = vec![false; graph.vertex_count()];
        for &v in comp {
            mask[v.idx()] = true;
        }
        self.region = mask;
        self.region_size = comp.len();
    }

    fn initialize(
        &mut self,
        graph: &Graph,
        state: &GameState,
        robber: VertexId,
    ) -> Result<(), GameError> {
        let w = state.cops[0];
        if robber == w {
            return Err(fault("robber initialised on the anchor vertex"));
        }
        let comp = component_of(graph, robber, |v| v == w);
        self.set_region(graph, comp.as_slice());
        let shadow = bfs_cut(graph, w, |u| u == w || self.in_region(u), None);
        let ctrl = GuardController::new(graph, shadow, vec![w], robber, &[w], None);
        self.tasks[0] = Task::Guard(ctrl);
        self.p = vec![w];
        self.p_slot = Some(0);
        self.initialized = true;
        self.push_measure(false)
    }

    fn free_slot(&mut self, slot: usize) {
        self.tasks[slot] = Task::Idle;
    }

    /// Trim bookkeeping endpoints lying on the other path or not incident
    /// to the territory; frees a guard whose bookkeeping path empties.
    fn trim(&mut self, graph: &Graph) {
        let incident = |g: &Graph, v: VertexId, region: &[bool]| {
            g.neighbors(v).iter().any(|w| region.get(w.idx()).copied().unwrap_or(false))
        };
        loop {
            let mut changed = false;
            for pass in 0..2 {
                let (this, other) = if pass == 0 {
                    (&mut self.p, &self.q)
                } else {
                    (&mut self.q, &self.p)
                };
                while let Some(&first) = this.first() {
                    let last = *this.last().unwrap();
                    if other.contains(&first) || !incident(graph, first, &self.region) {
                        this.remove(0);
                        changed = true;
                    } else if this.len() > 1
                        && (other.contains(&last) || !incident(graph, last, &self.region))
                    {
                        this.pop();
                        changed = true;
                    } else {
                        break;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if self.p.is_empty() {
            if let Some(s) = self.p_slot.take() {
                self.free_slot(s);
            }
        }
        if self.q.is_empty() {
            if let Some(s) = self.q_slot.take() {
                self.free_slot(s);
            }
        }
        // keep P the nonempty one
        if self.p.is_empty() && !self.q.is_empty() {
            std::mem::swap(&mut self.p, &mut self.q);
            std::mem::swap(&mut self.p_slot, &mut self.q_slot);
        }
    }

    /// Robber off its territory must be on a guarded path (capture next
    /// half-turn); anything else is a broken invariant.
    fn check_escape(&self, robber: VertexId) -> Result<(), GameError> {
        let on_guard = self.tasks.iter().any(|t| match t {
            Task::Guard(c) => c.path().contains(&robber),
            Task::Idle => false,
        });
        if on_guard {
            Ok(())
        } else {
            Err(fault(format!("robber escaped the territory at {robber}")))
        }
    }

    fn plan(
        &mut self,
        graph: &Graph,
        state: &GameState,
        robber: VertexId,
    ) -> Result<(), GameError> {
        self.trim(graph);
        if self.p.is_empty() {
            return Err(fault("both guard paths trimmed to empty"));
        }
        if !self.q.is_empty() {
            // disjoint case: guard a separator between the leading endpoints
            if self.p.iter().any(|v| self.q.contains(v)) {
                return Err(fault("paths still intersect after trimming"));
            }
            let keep = |v: VertexId| {
                self.in_region(v) || self.p.contains(&v) || self.q.contains(&v)
            };
            let walk = outer_face_boundary(graph, &self.pos, keep);
            let p_first = oriented_first(&walk, &self.p)
                .ok_or_else(|| fault("path P not on the outer boundary"))?;
            let q_first = oriented_first(&walk, &self.q)
                .ok_or_else(|| fault("path Q not on the outer boundary"))?;
            let h_keep = |v: VertexId| self.in_region(v) || v == p_first || v == q_first;
            let cut = graph.adjacent(p_first, q_first).then_some((p_first, q_first));
            let dist = bfs_cut(graph, p_first, h_keep, cut);
            if dist[q_first.idx()] == UNREACHED {
                return Err(fault("no separator path through the territory"));
            }
            let s = backtrack_path(graph, &dist, q_first);
            let slot = (0..3)
                .find(|i| Some(*i) != self.p_slot && Some(*i) != self.q_slot)
                .expect("three cops, two guards");
            let ctrl =
                GuardController::new(graph, dist, s.clone(), robber, &[state.cops[slot]], None);
            self.tasks[slot] = Task::Guard(ctrl);
            self.pending = Pending::GuardSep { slot, s, p_first, q_first };
            return Ok(());
        }
        // Q empty: park a free cop on a boundary vertex of P ∪ R
        let keep = |v: VertexId| self.in_region(v) || self.p.contains(&v);
        let walk = outer_face_boundary(graph, &self.pos, keep);
        let (target, new_p) = if walk.iter().all(|v| self.p.contains(v)) {
            let ends = [self.p[0], *self.p.last().unwrap()];
            let t = *ends.iter().min().unwrap();
            let mut np = self.p.clone();
            if np[0] == t {
                np.remove(0);
            } else {
                np.pop();
            }
            (t, np)
        } else {
            let t = walk
                .iter()
                .copied()
                .filter(|v| !self.p.contains(v))
                .min()
                .unwrap();
            (t, self.p.clone())
        };
        let dist = bfs_cut(graph, target, |_| true, None);
        let slot = (0..3)
            .filter(|i| Some(*i) != self.p_slot && Some(*i) != self.q_slot)
            .min_by_key(|&i| (dist[state.cops[i].idx()], i))
            .expect("a free cop exists");
        let shadow = bfs_cut(graph, target, |v| v == target || self.in_region(v), None);
        let ctrl = GuardController::new(
            graph,
            shadow,
            vec![target],
            robber,
            &[state.cops[slot]],
            None,
        );
        self.tasks[slot] = Task::Guard(ctrl);
        self.pending = Pending::Park { slot, target, new_p };
        Ok(())
    }

    fn advance_plan(
        &mut self,
        graph: &Graph,
        state: &GameState,
        robber: VertexId,
    ) -> Result<(), GameError> {
        loop {
            match &self.pending {
                Pending::Plan => {
                    if !self.in_region(robber) {
                        return self.check_escape(robber);
                    }
                    return self.plan(graph, state, robber);
                }
                Pending::Park { slot, target, new_p } => {
                    let (slot, target, new_p) = (*slot, *target, new_p.clone());
                    let done = match &self.tasks[slot] {
                        Task::Guard(c) => c.declared().is_some(),
                        Task::Idle => unreachable!("parker was tasked"),
                    };
                    if !done {
                        return Ok(());
                    }
                    if !self.in_region(robber) || robber == target {
                        return self.check_escape(robber);
                    }
                    let comp = component_of(graph, robber, |v| {
                        !self.in_region(v) || v == target
                    });
                    self.set_region(graph, &comp);
                    self.p = new_p;
                    self.q = vec![target];
                    self.q_slot = Some(slot);
                    self.push_measure(false)?;
                    self.pending = Pending::Plan;
                }
                Pending::GuardSep { slot, s, p_first, q_first } => {
                    let (slot, s, p_first, q_first) = (*slot, s.clone(), *p_first, *q_first);
                    let done = match &self.tasks[slot] {
                        Task::Guard(c) => c.declared().is_some(),
                        Task::Idle => unreachable!("separator guard was tasked"),
                    };
                    if !done {
                        return Ok(());
                    }
                    if !self.in_region(robber) {
                        return self.check_escape(robber);
                    }
                    if s.contains(&robber) {
                        // separator is guarded; capture next half-turn
                        return Ok(());
                    }
                    let comp =
                        component_of(graph, robber, |v| !self.in_region(v) || s.contains(&v));
                    let touches = |book: &[VertexId], lead: VertexId| {
                        comp.iter().any(|&v| {
                            graph
                                .neighbors(v)
                                .iter()
                                .any(|w| *w != lead && book.contains(w))
                        })
                    };
                    let q_side = touches(&self.q, q_first);
                    let p_side = touches(&self.p, p_first);
                    if !q_side {
                        // robber cut off from Q: keep P (minus its lead), S
                        if let Some(old) = self.q_slot.take() {
                            self.free_slot(old);
                        }
                        self.p.retain(|&v| v != p_first);
                    } else if !p_side {
                        if let Some(old) = self.p_slot.take() {
                            self.free_slot(old);
                        }
                        self.p = self.q.clone();
                        self.p.retain(|&v| v != q_first);
                        self.p_slot = self.q_slot.take();
                    } else {
                        return Err(fault(
                            "territory touches both old paths beyond the separator",
                        ));
                    }
                    self.q = s;
                    self.q_slot = Some(slot);
                    self.set_region(graph, &comp);
                    self.push_measure(true)?;
                    self.pending = Pending::Plan;
                }
            }
        }
    }

    /// Produces the three cop actions for the coming half-turn.
    pub fn cop_actions(
        &mut self,
        graph: &Graph,
        state: &GameState,
    ) -> Result<Vec<CopAction>, GameError> {
        assert_eq!(state.cops.len(), 3, "endgame team plays with three cops");
        let robber = state.robber.ok_or_else(|| fault("robber not placed"))?;
        if !self.initialized {
            self.initialize(graph, state, robber)?;
        }
        self.advance_plan(graph, state, robber)?;
        let turn = state.turn + 1;
        let mut out = Vec::with_capacity(3);
        for cop in 0..3 {
            let a = match &mut self.tasks[cop] {
                Task::Idle => CopAction::stay(cop, state.cops[cop]),
                Task::Guard(ctrl) => ctrl.action(graph, cop, state.cops[cop], robber, turn),
            };
            out.push(a);
        }
        Ok(out)
    }
}

/// Standalone three-cop strategy for a connected plane-drawn graph: all
/// cops start on the smallest-id outer-boundary vertex, then the endgame
/// team runs with P = that vertex and Q empty.
pub struct Planar3 {
    pos: Vec<Point>,
    team: Option<PlanarTeam>,
}

impl Planar3 {
    pub fn new(pos: Vec<Point>) -> Planar3 {
        Planar3 { pos, team: None }
    }

    /// Progress measures of the underlying team (empty before the first
    /// turn).
    pub fn measures(&self) -> &[(usize, usize)] {
        self.team.as_ref().map_or(&[], |t| t.measures())
    }
}

impl CopStrategy for Planar3 {
    fn place(&mut self, ctx: &MatchContext) -> Result<Vec<VertexId>, GameError> {
        if ctx.k != 3 {
            return Err(fault(format!("planar3 needs exactly 3 cops, got {}", ctx.k)));
        }
        let walk = outer_face_boundary(ctx.graph, &self.pos, |_| true);
        let w = walk.iter().copied().min().expect("nonempty boundary");
        Ok(vec![w; 3])
    }

    fn actions(
        &mut self,
        ctx: &MatchContext,
        state: &GameState,
        _history: &[TurnRecord],
    ) -> Result<Vec<CopAction>, GameError> {
        let team = self.team.get_or_insert_with(|| PlanarTeam::new(self.pos.clone()));
        team.cop_actions(ctx.graph, state)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::{default_max_moves, run_match, Outcome};
    use crate::robbers::{GreedyRobber, RandomRobber};

    fn assert_planar_win(name: &str, graph: &Graph, pos: &[Point]) {
        let mut cops = Planar3::new(pos.to_vec());
        let mut robber = GreedyRobber;
        let max = default_max_moves(graph.vertex_count(), 3);
        let trace = run_match(graph, None, &mut cops, &mut robber, 3, max)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        match trace.outcome {
            Outcome::Caught { .. } => {}
            other => panic!("{name}: expected capture, got {other:?}"),
        }
        let ms = cops.measures();
        assert!(
            ms.windows(2).all(|w| w[1].0 <= w[0].0 && w[1].1 <= w[0].1),
            "{name}: measures increased: {ms:?}"
        );
    }

    #[test]
    fn triangle_quick_capture() {
        let g = fixtures::complete(3);
        let pos = fixtures::cycle_positions(3);
        assert_planar_win("K3", &g, &pos);
    }

    #[test]
    fn grid_capture_vs_greedy() {
        let g = fixtures::grid(3, 3);
        let pos = fixtures::grid_positions(3, 3);
        assert_planar_win("grid3x3", &g, &pos);
    }

    #[test]
    fn grid5_capture_vs_greedy() {
        let g = fixtures::grid(5, 5);
        let pos = fixtures::grid_positions(5, 5);
        assert_planar_win("grid5x5", &g, &pos);
    }

    #[test]
    fn dodecahedron_capture_vs_greedy() {
        let (g, pos) = fixtures::dodecahedron();
        assert_planar_win("dodecahedron", &g, &pos);
    }

    #[test]
    fn corpus_capture_vs_random() {
        for (name, g, pos) in fixtures::planar_corpus() {
            let mut cops = Planar3::new(pos.clone());
            let mut robber = RandomRobber::new(7);
            let max = default_max_moves(g.vertex_count(), 3);
            let trace = run_match(&g, None, &mut cops, &mut robber, 3, max)
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(
                matches!(trace.outcome, Outcome::Caught { .. }),
                "{name}: {:?}",
                trace.outcome
            );
        }
    }
}
