//! Three-cop strategy for a graph embedded on the torus, played on its
//! planar cover and projected back to the base graph.
//!
//! After the robber places, a radius D is chosen so that D/|V| exceeds
//! log₂ of the ball size |B(D)| around the robber's lift. The escape
//! directions out of B(D) are the distance-D vertices adjacent to
//! unbounded components ("rays"); two BFS-tree paths to rays are guarded,
//! trapping the robber in a cyclic interval of rays which is then halved
//! with the free cop until the robber sits in a finite pocket, at which
//! point the planar endgame takes over. Cops on the cover may teleport
//! within fibers of the covering map; the projection collapses teleports,
//! so each cover action maps to a legal move of the base game.

use crate::cover::{build_cover_window, CoverError, CoverWindow, TorusEmbedding};
use crate::game::{
    CopAction, CopStrategy, GameError, GameState, MatchContext, Phase, Player, TurnRecord,
};
use crate::graph::{bfs, VertexId};
use crate::strategies::guard::GuardController;
use crate::strategies::outer_face::outer_face_boundary;
use crate::strategies::planar::PlanarTeam;
use crate::strategies::{component_of, UNREACHED};

fn fault(msg: impl Into<String>) -> GameError {
    GameError::StrategyFault { player: Player::Cops, msg: msg.into() }
}

/// Smallest D ≥ 1 with D/|V| > log₂|B(D)|, where the ball is measured in
/// the cover around the lift of `center`. Returns (D, |B(D)|).
pub fn choose_d(
    emb: &TorusEmbedding,
    center: VertexId,
    budget: usize,
) -> Result<(u32, usize), CoverError> {
    let nv = emb.base().vertex_count() as u32;
    let mut radius = (4 * nv).max(8);
    loop {
        let w = build_cover_window(emb, center, radius, budget)?;
        let profile = w.growth_profile(radius);
        for d in 1..=radius {
            let ball = profile[d as usize];
            if f64::from(d) / f64::from(nv) > (ball as f64).log2() {
                log::info!(
                    "choose_d: D={} with D/|V| = {:.4} > log2|B(D)| = {:.4} (|B(D)|={})",
                    d,
                    f64::from(d) / f64::from(nv),
                    (ball as f64).log2(),
                    ball
                );
                return Ok((d, ball));
            }
        }
        radius *= 2;
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RayError {
    #[error("no unbounded component adjacent to the distance-{0} ball")]
    NoInfiniteComponent(u32),
}

/// The escape directions out of B(D): distance-D vertices adjacent to an
/// unbounded component, in the cyclic order of the BFS tree's embedding,
/// together with the tree paths from the center to each of them.
pub struct RaySet {
    d: u32,
    /// tips[i] = v_{i+1} for the paper-style indices 1..=l.
    tips: Vec<VertexId>,
    paths: Vec<Vec<VertexId>>,
}

impl RaySet {
    pub fn len(&self) -> usize {
        self.tips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tips.is_empty()
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Ray index in 0..=l, with index 0 identified with index l.
    fn slot(&self, i: usize) -> usize {
        if i == 0 {
            self.tips.len() - 1
        } else {
            i - 1
        }
    }

    pub fn tip(&self, i: usize) -> VertexId {
        self.tips[self.slot(i)]
    }

    pub fn path(&self, i: usize) -> &[VertexId] {
        &self.paths[self.slot(i)]
    }
}

/// Cyclic order of tree leaves by an angular depth-first traversal:
/// children of each vertex are visited counterclockwise starting from the
/// direction back to the parent (plain angle order at the root).
fn angular_dfs_order(
    w: &CoverWindow,
    parent: &[Option<VertexId>],
    children: &[Vec<VertexId>],
    root: VertexId,
) -> Vec<VertexId> {
    let angle = |from: VertexId, to: VertexId| -> f64 {
        let (a, b) = (w.position(from), w.position(to));
        (b.y - a.y).atan2(b.x - a.x)
    };
    let mut order = Vec::new();
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        order.push(v);
        let mut kids = children[v.idx()].clone();
        match parent[v.idx()] {
            None => kids.sort_by(|&x, &y| {
                angle(v, x).partial_cmp(&angle(v, y)).unwrap().then(x.0.cmp(&y.0))
            }),
            Some(p) => {
                let back = angle(v, p);
                let key = |c: VertexId| (angle(v, c) - back).rem_euclid(std::f64::consts::TAU);
                kids.sort_by(|&x, &y| key(x).partial_cmp(&key(y)).unwrap().then(x.0.cmp(&y.0)));
            }
        }
        // push reversed so the smallest key is expanded first
        for &c in kids.iter().rev() {
            stack.push(c);
        }
    }
    order
}

pub fn boundary_rays(w: &CoverWindow, d: u32) -> Result<RaySet, RayError> {
    let g = w.graph();
    let n = g.vertex_count();
    let dm = bfs(g, w.center_id());
    let dist = dm.raw_dist();
    // components beyond the ball that reach the window fringe are the
    // finite stand-ins for unbounded components of the cover
    let mut unbounded = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for v in g.vertices() {
        if w.is_fringe(v) && dist[v.idx()] > d {
            unbounded[v.idx()] = true;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if !unbounded[u.idx()] && dist[u.idx()] > d {
                unbounded[u.idx()] = true;
                queue.push_back(u);
            }
        }
    }
    let is_tip = |v: VertexId| {
        dist[v.idx()] == d && g.neighbors(v).iter().any(|&u| unbounded[u.idx()])
    };
    if !g.vertices().any(is_tip) {
        return Err(RayError::NoInfiniteComponent(d));
    }
    // BFS tree restricted to the ball; tips are collected in DFS order
    let mut parent = vec![None; n];
    let mut children: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for v in g.vertices() {
        if dist[v.idx()] <= d && dist[v.idx()] > 0 {
            let p = dm.parent(v).expect("non-root ball vertex has a parent");
            parent[v.idx()] = Some(p);
            children[p.idx()].push(v);
        }
    }
    let order = angular_dfs_order(w, &parent, &children, w.center_id());
    let tips: Vec<VertexId> = order.into_iter().filter(|&v| is_tip(v)).collect();
    let ball: usize = dist.iter().filter(|&&x| x != UNREACHED && x <= d).count();
    assert!(tips.len() < ball, "more rays than ball vertices");
    let paths = tips
        .iter()
        .map(|&t| {
            let mut p = vec![t];
            let mut cur = t;
            while let Some(q) = parent[cur.idx()] {
                p.push(q);
                cur = q;
            }
            p.reverse();
            p
        })
        .collect();
    Ok(RaySet { d, tips, paths })
}

/// A ray index paired with the cop slot guarding its path.
type RaySlot = (usize, usize);

/// One interval-halving step of the induction, for diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct NarrowRecord {
    pub t: u32,
    pub a: usize,
    pub b: usize,
    pub turn: u32,
    pub robber_dist: u32,
}

/// Bookkeeping of a toroidal match: the chosen radius, ball size, ray
/// count, and every interval update with its invariant inputs.
#[derive(Debug, Clone, Default)]
pub struct ToroidalDiag {
    pub d: u32,
    pub ball: usize,
    pub l: usize,
    pub records: Vec<NarrowRecord>,
    /// Turn at which a cover cop first occupied the robber's lift.
    pub cover_caught: Option<u32>,
}

enum Stage {
    /// Guarding the first one or two ray paths.
    Establish { y: usize },
    /// Interval (a, b) guarded by slot_a/slot_b; slot_y establishing P_y.
    Narrow { a: usize, b: usize, y: usize, slot_a: usize, slot_b: usize, slot_y: usize },
    /// Finite pocket: the endgame team plays on the cover.
    Planar(PlanarTeam),
    /// No rays at all (cover component finite): walk everyone to a
    /// boundary vertex, then run the endgame team from scratch.
    FallbackApproach,
    FallbackPlanar(PlanarTeam),
}

struct St {
    window: CoverWindow,
    radius: u32,
    d: u32,
    nv: u32,
    /// Distances from the center in the current window.
    shadow: Vec<u32>,
    rays: Option<RaySet>,
    guards: [Option<GuardController>; 3],
    cover_cops: [VertexId; 3],
    robber_lift: VertexId,
    stage: Stage,
    t: u32,
    diag: ToroidalDiag,
}

/// Three-cop strategy on the base graph of a torus embedding.
pub struct Toroidal3 {
    emb: TorusEmbedding,
    margin_tiles: u32,
    budget: usize,
    st: Option<Box<St>>,
}

impl Toroidal3 {
    pub fn new(emb: TorusEmbedding) -> Toroidal3 {
        Toroidal3 {
            emb,
            margin_tiles: 4,
            budget: crate::cover::DEFAULT_WINDOW_BUDGET,
            st: None,
        }
    }

    /// Window margin beyond D, in multiples of |V| (default 4).
    pub fn with_margin(mut self, tiles: u32) -> Toroidal3 {
        self.margin_tiles = tiles.max(2);
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Toroidal3 {
        self.budget = budget;
        self
    }

    pub fn diag(&self) -> Option<&ToroidalDiag> {
        self.st.as_ref().map(|s| &s.diag)
    }

    /// Generous move cap from the proof's phase structure, computed from a
    /// fixed center so it can be fixed before the robber places.
    pub fn move_cap(emb: &TorusEmbedding) -> Result<u32, CoverError> {
        let nv = emb.base().vertex_count() as u32;
        let (d, _) = choose_d(emb, VertexId(0), crate::cover::DEFAULT_WINDOW_BUDGET)?;
        let t_max = d.div_ceil(nv);
        Ok(2 * 20 * (d + nv) * (t_max + 1))
    }

    fn setup(&mut self, robber_base: VertexId, cops: &[VertexId]) -> Result<(), GameError> {
        let nv = self.emb.base().vertex_count() as u32;
        let (d, ball) = choose_d(&self.emb, robber_base, self.budget)
            .map_err(|e| fault(format!("window construction failed: {e}")))?;
        let radius = d + self.margin_tiles * nv;
        let window = build_cover_window(&self.emb, robber_base, radius, self.budget)
            .map_err(|e| fault(format!("window construction failed: {e}")))?;
        let shadow = bfs(window.graph(), window.center_id()).raw_dist().to_vec();
        let rays = boundary_rays(&window, d).ok();
        let center = window.center_id();
        // lift each cop to its fiber element nearest the center
        let mut cover_cops = [center; 3];
        for (i, &c) in cops.iter().enumerate() {
            cover_cops[i] = window
                .fiber(c)
                .into_iter()
                .min_by_key(|v| (shadow[v.idx()], v.0))
                .expect("every base vertex is materialized in the window");
        }
        let mut st = St {
            radius,
            d,
            nv,
            shadow,
            rays: None,
            guards: [None, None, None],
            cover_cops,
            robber_lift: center,
            stage: Stage::FallbackApproach,
            t: 0,
            diag: ToroidalDiag {
                d,
                ball,
                l: rays.as_ref().map_or(0, RaySet::len),
                ..ToroidalDiag::default()
            },
            window,
        };
        match rays {
            None => {
                // finite cover component: converge on a boundary vertex of
                // the (fully materialized) component and play the endgame
                let g = st.window.graph();
                let walk = outer_face_boundary(g, &window_positions(&st.window), |_| true);
                let w = walk.iter().copied().min().expect("nonempty boundary");
                let shadow_w = crate::strategies::bfs_masked(g, w, |_| true);
                for i in 0..3 {
                    st.guards[i] = Some(GuardController::new(
                        g,
                        shadow_w.clone(),
                        vec![w],
                        st.robber_lift,
                        &st.window.fiber(st.window.project(st.cover_cops[i])),
                        Some(nv),
                    ));
                }
                st.stage = Stage::FallbackApproach;
            }
            Some(r) => {
                let l = r.len();
                let y = l / 2;
                st.guards[0] = Some(ray_guard(&st, r.path(0), 0));
                if l >= 2 {
                    st.guards[1] = Some(ray_guard(&st, r.path(y), 1));
                }
                for i in (if l >= 2 { 2 } else { 1 })..3 {
                    st.guards[i] = Some(loiter(&st, i));
                }
                st.stage = Stage::Establish { y };
                st.rays = Some(r);
            }
        }
        self.st = Some(Box::new(st));
        Ok(())
    }
}

fn window_positions(w: &CoverWindow) -> Vec<crate::geom::Point> {
    w.graph().vertices().map(|v| w.position(v)).collect()
}

/// Teleport-mode guard of a BFS-tree ray for the cop in `slot`.
fn ray_guard(st: &St, path: &[VertexId], slot: usize) -> GuardController {
    GuardController::new(
        st.window.graph(),
        st.shadow.clone(),
        path.to_vec(),
        st.robber_lift,
        &st.window.fiber(st.window.project(st.cover_cops[slot])),
        Some(st.nv),
    )
}

/// Keeps a free cop near the center so it is always in the robber's
/// component and close to its next assignment.
fn loiter(st: &St, slot: usize) -> GuardController {
    GuardController::new(
        st.window.graph(),
        st.shadow.clone(),
        vec![st.window.center_id()],
        st.robber_lift,
        &st.window.fiber(st.window.project(st.cover_cops[slot])),
        Some(st.nv),
    )
}

fn on_paths_mask(n: usize, paths: &[&[VertexId]]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for p in paths {
        for &v in *p {
            mask[v.idx()] = true;
        }
    }
    mask
}

impl St {
    fn rebuild_window(&mut self, emb: &TorusEmbedding, budget: usize) -> Result<(), GameError> {
        let margin = self.radius - self.d;
        self.radius = self.d + 2 * margin;
        let center_base = self.window.project(self.window.center_id());
        self.window = build_cover_window(emb, center_base, self.radius, budget)
            .map_err(|e| fault(format!("window rebuild failed: {e}")))?;
        self.shadow = bfs(self.window.graph(), self.window.center_id())
            .raw_dist()
            .to_vec();
        for g in self.guards.iter_mut().flatten() {
            g.rebuild(self.window.graph(), self.shadow.clone());
        }
        log::info!("window rebuilt at radius {}", self.radius);
        Ok(())
    }

    fn lift_robber(
        &mut self,
        emb: &TorusEmbedding,
        budget: usize,
        to_base: VertexId,
    ) -> Result<(), GameError> {
        match self.window.lift_step(self.robber_lift, to_base) {
            Ok(v) => {
                self.robber_lift = v;
                Ok(())
            }
            Err(CoverError::WindowExhausted(_)) => {
                self.rebuild_window(emb, budget)?;
                self.robber_lift = self
                    .window
                    .lift_step(self.robber_lift, to_base)
                    .map_err(|e| fault(format!("lift failed after rebuild: {e}")))?;
                Ok(())
            }
            Err(e) => Err(fault(format!("robber lift failed: {e}"))),
        }
    }

    fn declared(&self, slot: usize) -> bool {
        self.guards[slot].as_ref().is_some_and(|g| g.declared().is_some())
    }

    fn invariant_checks(&mut self, a: usize, b: usize, turn: u32) -> Result<(), GameError> {
        let l = self.rays.as_ref().expect("rays exist in the induction").len();
        let t = self.t;
        if b <= a {
            return Err(fault(format!("interval degenerate: a={a} b={b} at t={t}")));
        }
        let width = (b - a - 1) as u128;
        let shifted = width.checked_shl(t + 1).unwrap_or(u128::MAX);
        if shifted > l as u128 {
            return Err(fault(format!(
                "halving invariant violated: (b-a-1)*2^(t+1) = {shifted} > l = {l} \
                 (a={a} b={b} t={t})"
            )));
        }
        let rd = self.shadow[self.robber_lift.idx()];
        if u64::from(rd) > u64::from(t + 1) * u64::from(self.nv) {
            return Err(fault(format!(
                "drift invariant violated: d(r0, r) = {rd} > (t+1)|V| = {} at t={t}",
                (t + 1) * self.nv
            )));
        }
        if u64::from(t + 1) * u64::from(self.nv) > u64::from(self.d) {
            return Err(fault(format!(
                "induction ran past t = D/|V| - 1: t={t}, D={}, |V|={}",
                self.d, self.nv
            )));
        }
        self.diag.records.push(NarrowRecord { t, a, b, turn, robber_dist: rd });
        Ok(())
    }

    /// Robber sits in an unbounded component: which side of P_y is it on?
    /// Returns the new interval, judged by which rays the robber's
    /// component inside the ball still reaches.
    fn pick_side(
        &self,
        a: usize,
        b: usize,
        y: usize,
        blocked: &[bool],
    ) -> Result<(usize, usize), GameError> {
        let g = self.window.graph();
        let comp = component_of(g, self.robber_lift, |v| {
            blocked[v.idx()] || self.shadow[v.idx()] > self.d
        });
        let mut in_comp = vec![false; g.vertex_count()];
        for &v in &comp {
            in_comp[v.idx()] = true;
        }
        let rays = self.rays.as_ref().expect("rays exist");
        let mut low = false;
        let mut high = false;
        for i in (a + 1)..b {
            if i != y && in_comp[rays.tip(i).idx()] {
                if i < y {
                    low = true;
                } else {
                    high = true;
                }
            }
        }
        match (low, high) {
            (true, false) => Ok((a, y)),
            (false, true) => Ok((y, b)),
            (true, true) => Err(fault(format!(
                "robber component reaches rays on both sides of y={y} in ({a},{b})"
            ))),
            (false, false) => Err(fault(format!(
                "unbounded robber component reaches no ray strictly inside ({a},{b})"
            ))),
        }
    }

    /// Hand off to the planar endgame with the first path pair whose
    /// removal leaves the robber in a bounded component.
    fn handoff(&mut self, pairs: &[(RaySlot, RaySlot)]) -> Result<(), GameError> {
        let g = self.window.graph();
        let n = g.vertex_count();
        let rays = self.rays.as_ref().expect("rays exist");
        for &((pi, p_slot), (qi, q_slot)) in pairs {
            let p_path = rays.path(pi).to_vec();
            let q_path = rays.path(qi).to_vec();
            let mask = on_paths_mask(n, &[&p_path, &q_path]);
            let comp = component_of(g, self.robber_lift, |v| mask[v.idx()]);
            if comp.iter().any(|&v| self.window.is_fringe(v)) {
                continue;
            }
            let mut region = vec![false; n];
            for &v in &comp {
                region[v.idx()] = true;
            }
            let p_ctrl = self.guards[p_slot].take().expect("pair guard exists");
            let q_ctrl = self.guards[q_slot].take().expect("pair guard exists");
            for gd in self.guards.iter_mut() {
                *gd = None;
            }
            let team = PlanarTeam::from_handoff(
                window_positions(&self.window),
                p_path,
                p_slot,
                p_ctrl,
                q_path,
                Some((q_slot, q_ctrl)),
                region,
            );
            log::info!(
                "planar handoff: paths to rays {pi} and {qi}, region {} vertices",
                comp.len()
            );
            self.stage = Stage::Planar(team);
            return Ok(());
        }
        Err(fault("bounded robber component, but no path pair confines it"))
    }

    /// Single-ray degenerate handoff (l = 1): P alone must confine.
    fn handoff_single(&mut self, slot: usize) -> Result<(), GameError> {
        let g = self.window.graph();
        let n = g.vertex_count();
        let p_path = self.rays.as_ref().expect("rays exist").path(1).to_vec();
        let mask = on_paths_mask(n, &[&p_path]);
        let comp = component_of(g, self.robber_lift, |v| mask[v.idx()]);
        if comp.iter().any(|&v| self.window.is_fringe(v)) {
            return Err(fault("single escape ray, but robber component is unbounded"));
        }
        let mut region = vec![false; n];
        for &v in &comp {
            region[v.idx()] = true;
        }
        let p_ctrl = self.guards[slot].take().expect("ray guard exists");
        for gd in self.guards.iter_mut() {
            *gd = None;
        }
        let team = PlanarTeam::from_handoff(
            window_positions(&self.window),
            p_path,
            slot,
            p_ctrl,
            Vec::new(),
            None,
            region,
        );
        self.stage = Stage::Planar(team);
        Ok(())
    }

    /// Advance the induction state machine; does not move any cop.
    fn advance(&mut self, turn: u32) -> Result<(), GameError> {
        {
            match &self.stage {
                Stage::Planar(_) | Stage::FallbackPlanar(_) => Ok(()),
                Stage::FallbackApproach => {
                    if !self.declared(0) {
                        return Ok(());
                    }
                    let team = PlanarTeam::new(window_positions(&self.window));
                    for gd in self.guards.iter_mut() {
                        *gd = None;
                    }
                    self.stage = Stage::FallbackPlanar(team);
                    Ok(())
                }
                Stage::Establish { y } => {
                    let y = *y;
                    let rays_l = self.rays.as_ref().expect("rays exist").len();
                    let need_second = rays_l >= 2;
                    if !self.declared(0) || (need_second && !self.declared(1)) {
                        return Ok(());
                    }
                    if !need_second {
                        return self.handoff_single(0);
                    }
                    let (p0, py) = {
                        let rays = self.rays.as_ref().unwrap();
                        (rays.path(0).to_vec(), rays.path(y).to_vec())
                    };
                    let n = self.window.graph().vertex_count();
                    let blocked = on_paths_mask(n, &[&p0, &py]);
                    if blocked[self.robber_lift.idx()] {
                        return Ok(()); // on a guarded path: capture imminent
                    }
                    let comp = component_of(self.window.graph(), self.robber_lift, |v| {
                        blocked[v.idx()]
                    });
                    if !comp.iter().any(|&v| self.window.is_fringe(v)) {
                        return self.handoff(&[((0, 0), (y, 1))]);
                    }
                    let (a, b) = self.pick_side(0, rays_l, y, &blocked)?;
                    self.t = 0;
                    self.invariant_checks(a, b, turn)?;
                    let (slot_a, slot_b) = if (a, b) == (0, y) { (0, 1) } else { (1, 0) };
                    if b - a < 2 {
                        return Err(fault(format!(
                            "initial interval ({a},{b}) leaves no ray to split on"
                        )));
                    }
                    let y2 = (a + b) / 2;
                    let slot_y = 2;
                    self.guards[slot_y] = Some(ray_guard(
                        self,
                        self.rays.as_ref().unwrap().path(y2),
                        slot_y,
                    ));
                    self.stage = Stage::Narrow { a, b, y: y2, slot_a, slot_b, slot_y };
                    Ok(())
                }
                Stage::Narrow { a, b, y, slot_a, slot_b, slot_y } => {
                    let (a, b, y, slot_a, slot_b, slot_y) =
                        (*a, *b, *y, *slot_a, *slot_b, *slot_y);
                    if !self.declared(slot_y) {
                        return Ok(());
                    }
                    let rays = self.rays.as_ref().expect("rays exist");
                    let (pa, pb, py) = (
                        rays.path(a).to_vec(),
                        rays.path(b).to_vec(),
                        rays.path(y).to_vec(),
                    );
                    let n = self.window.graph().vertex_count();
                    let blocked = on_paths_mask(n, &[&pa, &pb, &py]);
                    if blocked[self.robber_lift.idx()] {
                        return Ok(());
                    }
                    let comp = component_of(self.window.graph(), self.robber_lift, |v| {
                        blocked[v.idx()]
                    });
                    if !comp.iter().any(|&v| self.window.is_fringe(v)) {
                        return self.handoff(&[
                            ((a, slot_a), (y, slot_y)),
                            ((y, slot_y), (b, slot_b)),
                            ((a, slot_a), (b, slot_b)),
                        ]);
                    }
                    let (na, nb) = self.pick_side(a, b, y, &blocked)?;
                    self.t += 1;
                    self.invariant_checks(na, nb, turn)?;
                    let (nsa, nsb, freed) = if na == a {
                        (slot_a, slot_y, slot_b)
                    } else {
                        (slot_y, slot_b, slot_a)
                    };
                    if nb - na < 2 {
                        return Err(fault(format!(
                            "interval ({na},{nb}) still unbounded but has no interior ray"
                        )));
                    }
                    let y2 = (na + nb) / 2;
                    self.guards[freed] = Some(ray_guard(
                        self,
                        self.rays.as_ref().unwrap().path(y2),
                        freed,
                    ));
                    self.stage = Stage::Narrow {
                        a: na,
                        b: nb,
                        y: y2,
                        slot_a: nsa,
                        slot_b: nsb,
                        slot_y: freed,
                    };
                    Ok(())
                }
            }
        }
    }
}

impl CopStrategy for Toroidal3 {
    fn place(&mut self, ctx: &MatchContext) -> Result<Vec<VertexId>, GameError> {
        if ctx.k != 3 {
            return Err(fault(format!("toroidal3 needs exactly 3 cops, got {}", ctx.k)));
        }
        Ok(vec![VertexId(0); 3])
    }

    fn actions(
        &mut self,
        ctx: &MatchContext,
        state: &GameState,
        history: &[TurnRecord],
    ) -> Result<Vec<CopAction>, GameError> {
        let robber_base = state.robber.ok_or_else(|| fault("robber not placed"))?;
        if self.st.is_none() {
            self.setup(robber_base, &state.cops)?;
        }
        let budget = self.budget;
        let emb = self.emb.clone();
        let st = self.st.as_mut().expect("state initialised");
        if let Some(TurnRecord::Robber { to, .. }) = history.last() {
            st.lift_robber(&emb, budget, *to)?;
        }
        debug_assert_eq!(st.window.project(st.robber_lift), robber_base);
        let turn = state.turn + 1;
        st.advance(turn)?;
        // one cover half-turn
        let g = st.window.graph();
        let mut cover_actions = Vec::with_capacity(3);
        match &mut st.stage {
            Stage::Planar(team) | Stage::FallbackPlanar(team) => {
                let mut cst = GameState::new(3);
                cst.cops = st.cover_cops.to_vec();
                cst.robber = Some(st.robber_lift);
                cst.turn = state.turn;
                cst.phase = Phase::CopsToMove;
                cover_actions = team.cop_actions(g, &cst)?;
            }
            _ => {
                for slot in 0..3 {
                    let ctrl = st.guards[slot].as_mut().expect("all cops tasked");
                    cover_actions.push(ctrl.action(
                        g,
                        slot,
                        st.cover_cops[slot],
                        st.robber_lift,
                        turn,
                    ));
                }
            }
        }
        // project to the base graph; teleports collapse under the cover map
        let mut base_actions = Vec::with_capacity(3);
        for a in &cover_actions {
            st.cover_cops[a.cop] = a.move_to;
            if a.move_to == st.robber_lift && st.diag.cover_caught.is_none() {
                st.diag.cover_caught = Some(turn);
            }
            base_actions.push(CopAction {
                cop: a.cop,
                teleport_to: None,
                move_to: st.window.project(a.move_to),
            });
        }
        let _ = ctx;
        Ok(base_actions)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::{run_match, Outcome};
    use crate::robbers::GreedyRobber;

    #[test]
    fn choose_d_c4_ring() {
        let emb = fixtures::c4_ring();
        let (d, ball) = choose_d(&emb, VertexId(0), crate::cover::DEFAULT_WINDOW_BUDGET).unwrap();
        // cover is a double ray: |B(D)| = 2D + 1; 22/4 > log2(45), 21/4 < log2(43)
        assert_eq!(d, 22);
        assert_eq!(ball, 45);
    }

    #[test]
    fn c4_ring_has_two_rays() {
        let emb = fixtures::c4_ring();
        let w = build_cover_window(&emb, VertexId(0), 30, crate::cover::DEFAULT_WINDOW_BUDGET)
            .unwrap();
        let rays = boundary_rays(&w, 22).unwrap();
        assert_eq!(rays.len(), 2);
        for i in 1..=2 {
            assert_eq!(rays.path(i).len(), 23);
        }
        assert_eq!(rays.tip(0), rays.tip(2));
    }

    #[test]
    fn one_tile_cover_has_no_rays() {
        let (g, pos) = fixtures::dodecahedron();
        let emb = fixtures::one_tile_planar(&g, &pos);
        let w =
            build_cover_window(&emb, VertexId(0), 64, crate::cover::DEFAULT_WINDOW_BUDGET).unwrap();
        assert!(matches!(
            boundary_rays(&w, 10),
            Err(RayError::NoInfiniteComponent(10))
        ));
    }

    #[test]
    fn c4_ring_capture_vs_greedy() {
        let emb = fixtures::c4_ring();
        let g = emb.base().clone();
        let cap = Toroidal3::move_cap(&emb).unwrap();
        let mut cops = Toroidal3::new(emb);
        let mut robber = GreedyRobber;
        let trace = run_match(&g, None, &mut cops, &mut robber, 3, cap).unwrap();
        assert!(
            matches!(trace.outcome, Outcome::Caught { .. }),
            "outcome: {:?}",
            trace.outcome
        );
    }

    #[test]
    fn one_tile_fallback_capture() {
        let (g, pos) = fixtures::dodecahedron();
        let emb = fixtures::one_tile_planar(&g, &pos);
        let mut cops = Toroidal3::new(emb);
        let mut robber = GreedyRobber;
        let trace = run_match(&g, None, &mut cops, &mut robber, 3, 2_000).unwrap();
        assert!(
            matches!(trace.outcome, Outcome::Caught { .. }),
            "outcome: {:?}",
            trace.outcome
        );
    }

    #[test]
    fn torus_grid_capture_vs_greedy() {
        let emb = fixtures::torus_grid(4);
        let g = emb.base().clone();
        let cap = Toroidal3::move_cap(&emb).unwrap();
        let mut cops = Toroidal3::new(emb);
        let mut robber = GreedyRobber;
        let trace = run_match(&g, None, &mut cops, &mut robber, 3, cap).unwrap();
        assert!(
            matches!(trace.outcome, Outcome::Caught { .. }),
            "outcome: {:?}",
            trace.outcome
        );
    }
}
