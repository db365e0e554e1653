//! Exact game solving by backward induction.
//!
//! Game positions are (sorted cop multiset, robber vertex, side to move).
//! Values count cop half-turns to guaranteed capture under optimal play;
//! unreachable-by-induction positions are robber wins. The table is built
//! retrograde: capture positions seed a bucket queue ordered by value, cop
//! positions finalize on their first finalized successor (that successor is
//! the min), robber positions on their last (the max).

use std::collections::HashMap;

use thiserror::Error;

use crate::game::{
    CopAction, CopStrategy, GameError, GameState, MatchContext, Player, RobberStrategy, TurnRecord,
};
use crate::graph::{Graph, VertexId};

/// Default cap on the number of solver states, overridable by callers (the
/// CLI maps PURSUIT_STATE_BUDGET onto this).
pub const DEFAULT_STATE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolvePhase {
    CopsToMove,
    RobberToMove,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateKey {
    /// Sorted ascending; cops are interchangeable.
    pub cops: Vec<VertexId>,
    pub robber: VertexId,
    pub phase: SolvePhase,
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("state budget exceeded: {states} states for k={k}, budget {budget} (try a smaller graph or fewer cops)")]
    BudgetExceeded { states: u64, k: usize, budget: u64 },
    #[error("table is not cop-win from any initial placement")]
    NotCopWin,
}

const UNSET: u32 = u32::MAX;

/// Value table for a fixed number of cops on a fixed graph.
pub struct CaptureTable {
    pub k: usize,
    n: usize,
    /// All sorted cop multisets in lexicographic order.
    sets: Vec<Vec<u32>>,
    set_rank: HashMap<Vec<u32>, u32>,
    /// Indexed by ((set_rank * n) + robber) * 2 + phase; UNSET means the
    /// robber survives forever.
    values: Vec<u32>,
}

fn multisets(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    loop {
        out.push(cur.clone());
        // next multiset in lex order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 < n as u32 {
                let v = cur[i] + 1;
                for slot in cur.iter_mut().skip(i) {
                    *slot = v;
                }
                break;
            }
        }
    }
}

impl CaptureTable {
    fn idx(&self, set_rank: u32, robber: u32, phase: SolvePhase) -> usize {
        let p = match phase {
            SolvePhase::CopsToMove => 0,
            SolvePhase::RobberToMove => 1,
        };
        (set_rank as usize * self.n + robber as usize) * 2 + p
    }

    fn rank_of(&self, cops: &[VertexId]) -> Option<u32> {
        let mut key: Vec<u32> = cops.iter().map(|v| v.0).collect();
        key.sort_unstable();
        self.set_rank.get(&key).copied()
    }

    /// Capture distance in cop half-turns, or None when the robber wins.
    pub fn value(&self, key: &StateKey) -> Option<u32> {
        let rank = self.rank_of(&key.cops).expect("cops on graph vertices");
        let v = self.values[self.idx(rank, key.robber.0, key.phase)];
        if v == UNSET {
            None
        } else {
            Some(v)
        }
    }

    /// Value of a cop placement: the best response of the robber's placement
    /// (None when some robber placement escapes forever).
    pub fn placement_value(&self, cops: &[VertexId]) -> Option<u32> {
        let rank = self.rank_of(cops).expect("cops on graph vertices");
        let mut worst = Some(0u32);
        for r in 0..self.n as u32 {
            let v = self.values[self.idx(rank, r, SolvePhase::CopsToMove)];
            let v = if v == UNSET { None } else { Some(v) };
            if value_gt(v, worst) {
                worst = v;
            }
        }
        worst
    }

    /// Lexicographically smallest placement minimizing `placement_value`;
    /// None when no placement is cop-win.
    pub fn best_placement(&self) -> (Vec<VertexId>, Option<u32>) {
        let mut best: Option<(Vec<VertexId>, Option<u32>)> = None;
        for set in &self.sets {
            let cops: Vec<VertexId> = set.iter().map(|&v| VertexId(v)).collect();
            let val = self.placement_value(&cops);
            let better = match &best {
                None => true,
                Some((_, bv)) => value_gt(*bv, val),
            };
            if better {
                best = Some((cops, val));
            }
        }
        best.expect("at least one multiset")
    }

    pub fn is_cop_win(&self) -> bool {
        self.best_placement().1.is_some()
    }

    /// Robber placement maximizing the capture distance; prefers escape
    /// forever, ties toward the smallest vertex id.
    pub fn robber_best_placement(&self, cops: &[VertexId]) -> VertexId {
        let rank = self.rank_of(cops).expect("cops on graph vertices");
        let mut best: Option<(Option<u32>, u32)> = None;
        for r in 0..self.n as u32 {
            let val = if cops.iter().any(|c| c.0 == r) {
                Some(0)
            } else {
                let v = self.values[self.idx(rank, r, SolvePhase::CopsToMove)];
                (v != UNSET).then_some(v)
            };
            if best.is_none() || value_gt(val, best.unwrap().0) {
                best = Some((val, r));
            }
        }
        VertexId(best.expect("nonempty graph").1)
    }

    /// Robber move within N[r] maximizing the capture distance, smallest id
    /// on ties.
    pub fn robber_best_move(&self, graph: &Graph, cops: &[VertexId], r: VertexId) -> VertexId {
        let rank = self.rank_of(cops).expect("cops on graph vertices");
        let mut options: Vec<u32> = vec![r.0];
        options.extend(graph.neighbors(r).iter().map(|v| v.0));
        options.sort_unstable();
        let mut best: Option<(Option<u32>, u32)> = None;
        for to in options {
            let val = if cops.iter().any(|c| c.0 == to) {
                Some(0)
            } else {
                let v = self.values[self.idx(rank, to, SolvePhase::CopsToMove)];
                (v != UNSET).then_some(v)
            };
            if best.is_none() || value_gt(val, best.unwrap().0) {
                best = Some((val, to));
            }
        }
        VertexId(best.expect("closed neighborhood nonempty").1)
    }

    /// `c1 .. ck r phase value` per line; `inf` for robber-win states.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (rank, set) in self.sets.iter().enumerate() {
            for r in 0..self.n as u32 {
                for phase in [SolvePhase::CopsToMove, SolvePhase::RobberToMove] {
                    let v = self.values[self.idx(rank as u32, r, phase)];
                    for c in set {
                        out.push_str(&format!("{c} "));
                    }
                    let p = match phase {
                        SolvePhase::CopsToMove => "COPS",
                        SolvePhase::RobberToMove => "ROBBER",
                    };
                    if v == UNSET {
                        out.push_str(&format!("{r} {p} inf\n"));
                    } else {
                        out.push_str(&format!("{r} {p} {v}\n"));
                    }
                }
            }
        }
        out
    }
}

/// None is +infinity.
fn value_gt(a: Option<u32>, b: Option<u32>) -> bool {
    match (a, b) {
        (None, None) => false,
        (None, Some(_)) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x > y,
    }
}

/// Enumerates every multiset reachable from `cops` in one cop half-turn
/// (each cop moves within its closed neighborhood), sorted, with duplicates.
fn cop_moves(graph: &Graph, cops: &[u32], f: &mut dyn FnMut(&[u32])) {
    let k = cops.len();
    let choices: Vec<Vec<u32>> = cops
        .iter()
        .map(|&c| {
            let mut opts: Vec<u32> = vec![c];
            opts.extend(graph.neighbors(VertexId(c)).iter().map(|v| v.0));
            opts
        })
        .collect();
    let mut pick = vec![0usize; k];
    let mut buf = vec![0u32; k];
    loop {
        for i in 0..k {
            buf[i] = choices[i][pick[i]];
        }
        buf.sort_unstable();
        f(&buf);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

pub fn solve_game(graph: &Graph, k: usize) -> Result<CaptureTable, SolverError> {
    solve_game_with_budget(graph, k, DEFAULT_STATE_BUDGET)
}

pub fn solve_game_with_budget(
    graph: &Graph,
    k: usize,
    budget: u64,
) -> Result<CaptureTable, SolverError> {
    assert!(k >= 1);
    let n = graph.vertex_count();
    assert!(n >= 1);
    let sets = multisets(n, k);
    let states = sets.len() as u64 * n as u64 * 2;
    if states > budget {
        return Err(SolverError::BudgetExceeded { states, k, budget });
    }
    let set_rank: HashMap<Vec<u32>, u32> = sets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i as u32))
        .collect();
    let mut table = CaptureTable {
        k,
        n,
        sets,
        set_rank,
        values: vec![UNSET; states as usize],
    };

    // out-degree counters for non-capture robber-to-move states
    let mut counter: Vec<u32> = vec![0; table.sets.len() * n];
    for rank in 0..table.sets.len() {
        for r in 0..n as u32 {
            if !table.sets[rank].contains(&r) {
                counter[rank * n + r as usize] = graph.degree(VertexId(r)) as u32 + 1;
            }
        }
    }

    // bucket queue seeded with capture states (robber on a cop); a capture
    // state is terminal for both move relations, encoded as phase 2
    let mut buckets: Vec<Vec<(u32, u32, u8)>> = vec![Vec::new()];
    for (rank, set) in table.sets.iter().enumerate() {
        for &c in set.iter() {
            let i = table.idx(rank as u32, c, SolvePhase::CopsToMove);
            if table.values[i] == UNSET {
                table.values[i] = 0;
                table.values[i + 1] = 0;
                buckets[0].push((rank as u32, c, 2));
            }
        }
    }

    let mut v = 0usize;
    while v < buckets.len() {
        while let Some((rank, robber, phase)) = buckets[v].pop() {
            let set = table.sets[rank as usize].clone();
            if phase != 0 {
                // robber-side (or capture) node finalized at v: every cop
                // multiset one half-turn away reaches it, so any such
                // cops-to-move predecessor not yet finalized gets 1 + v
                // (processing order makes v its minimum successor)
                let target = v as u32 + 1;
                while buckets.len() <= target as usize {
                    buckets.push(Vec::new());
                }
                cop_moves(graph, &set, &mut |prev| {
                    let Some(&prank) = table.set_rank.get(prev) else { return };
                    let i = table.idx(prank, robber, SolvePhase::CopsToMove);
                    if table.values[i] == UNSET {
                        table.values[i] = target;
                        buckets[target as usize].push((prank, robber, 0));
                    }
                });
            }
            if phase != 1 {
                // cop-side (or capture) node finalized at v: decrement the
                // robber-to-move predecessors over the robber's closed
                // neighborhood; the last decrement fixes the max at v
                let mut relax = |prank: u32, pr: u32| {
                    let i = table.idx(prank, pr, SolvePhase::RobberToMove);
                    if table.values[i] != UNSET {
                        return;
                    }
                    let c = &mut counter[prank as usize * n + pr as usize];
                    *c -= 1;
                    if *c == 0 {
                        table.values[i] = v as u32;
                        buckets[v].push((prank, pr, 1));
                    }
                };
                relax(rank, robber);
                for &nb in graph.neighbors(VertexId(robber)) {
                    relax(rank, nb.0);
                }
            }
        }
        v += 1;
    }
    Ok(table)
}

/// Least k ≤ k_max for which the cops win from their best placement.
pub fn cop_number(graph: &Graph, k_max: usize) -> Result<Option<usize>, SolverError> {
    cop_number_with_budget(graph, k_max, DEFAULT_STATE_BUDGET)
}

pub fn cop_number_with_budget(
    graph: &Graph,
    k_max: usize,
    budget: u64,
) -> Result<Option<usize>, SolverError> {
    for k in 1..=k_max {
        if solve_game_with_budget(graph, k, budget)?.is_cop_win() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Cop strategy reading off value-decreasing moves from a capture table.
pub struct OptimalCops<'a> {
    table: &'a CaptureTable,
}

pub fn optimal_cops(table: &CaptureTable) -> Result<OptimalCops<'_>, SolverError> {
    if !table.is_cop_win() {
        return Err(SolverError::NotCopWin);
    }
    Ok(OptimalCops { table })
}

impl CopStrategy for OptimalCops<'_> {
    fn place(&mut self, _ctx: &MatchContext) -> Result<Vec<VertexId>, GameError> {
        Ok(self.table.best_placement().0)
    }

    fn actions(
        &mut self,
        graph_ctx: &MatchContext,
        state: &GameState,
        _history: &[TurnRecord],
    ) -> Result<Vec<CopAction>, GameError> {
        let graph = graph_ctx.graph;
        let robber = state.robber.expect("robber placed");
        let cops: Vec<u32> = state.cops.iter().map(|c| c.0).collect();
        let mut sorted = cops.clone();
        sorted.sort_unstable();
        // best successor multiset: capture if possible, else the
        // lexicographically smallest multiset of minimal robber-side value
        let mut best: Option<(Option<u32>, Vec<u32>)> = None;
        cop_moves(graph, &sorted, &mut |succ| {
            let rank = self.table.set_rank[succ];
            let val = if succ.contains(&robber.0) {
                Some(0)
            } else {
                let v = self.table.values[self.table.idx(rank, robber.0, SolvePhase::RobberToMove)];
                if v == UNSET {
                    None
                } else {
                    Some(v)
                }
            };
            let better = match &best {
                None => true,
                Some((bv, bset)) => {
                    value_gt(*bv, val) || (*bv == val && succ < bset.as_slice())
                }
            };
            if better {
                best = Some((val, succ.to_vec()));
            }
        });
        let (_, target) = best.expect("cop always has a move");
        assign_cop_actions(graph, &state.cops, &target).ok_or_else(|| GameError::StrategyFault {
            player: Player::Cops,
            msg: "no legal assignment to target multiset".into(),
        })
    }
}

/// Matches each cop to a vertex of the target multiset reachable in one
/// step. Tries cops in order, backtracking; k is small.
fn assign_cop_actions(graph: &Graph, cops: &[VertexId], target: &[u32]) -> Option<Vec<CopAction>> {
    let k = cops.len();
    let mut used = vec![false; k];
    let mut chosen = vec![0u32; k];
    fn rec(
        graph: &Graph,
        cops: &[VertexId],
        target: &[u32],
        used: &mut [bool],
        chosen: &mut [u32],
        i: usize,
    ) -> bool {
        if i == cops.len() {
            return true;
        }
        for j in 0..target.len() {
            if used[j] {
                continue;
            }
            let t = VertexId(target[j]);
            if t == cops[i] || graph.adjacent(cops[i], t) {
                used[j] = true;
                chosen[i] = target[j];
                if rec(graph, cops, target, used, chosen, i + 1) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    if !rec(graph, cops, target, &mut used, &mut chosen, 0) {
        return None;
    }
    Some(
        (0..k)
            .map(|i| CopAction::step(i, VertexId(chosen[i])))
            .collect(),
    )
}

/// Robber strategy maximizing the capture distance; prefers robber-win
/// states and breaks ties toward the smallest vertex id.
pub struct OptimalRobber<'a> {
    table: &'a CaptureTable,
}

pub fn optimal_robber(table: &CaptureTable) -> OptimalRobber<'_> {
    OptimalRobber { table }
}

impl RobberStrategy for OptimalRobber<'_> {
    fn place(&mut self, _ctx: &MatchContext, cops: &[VertexId]) -> Result<VertexId, GameError> {
        Ok(self.table.robber_best_placement(cops))
    }

    fn turn(
        &mut self,
        ctx: &MatchContext,
        state: &GameState,
        _history: &[TurnRecord],
    ) -> Result<VertexId, GameError> {
        let r = state.robber.expect("robber placed");
        Ok(self.table.robber_best_move(ctx.graph, &state.cops, r))
    }
}

/// Cone-ordering check: a graph is one-cop-win iff it is connected and
/// repeatedly deleting a dominated vertex (N[v] ⊆ N[u] for some other u)
/// empties it down to a single vertex. Serves as an oracle independent of
/// the fixpoint solver.
pub fn is_dismantlable(graph: &Graph) -> bool {
    let n = graph.vertex_count();
    let mut alive: Vec<bool> = vec![true; n];
    let mut remaining = n;
    loop {
        if remaining <= 1 {
            return true;
        }
        let mut removed = false;
        'scan: for v in 0..n {
            if !alive[v] {
                continue;
            }
            for u in 0..n {
                if u == v || !alive[u] {
                    continue;
                }
                // N[v] ⊆ N[u] within the surviving induced subgraph
                let vu = VertexId(v as u32);
                let uu = VertexId(u as u32);
                let dominated = std::iter::once(vu)
                    .chain(graph.neighbors(vu).iter().copied())
                    .filter(|w| alive[w.idx()])
                    .all(|w| w == uu || graph.adjacent(uu, w));
                if dominated {
                    alive[v] = false;
                    remaining -= 1;
                    removed = true;
                    break 'scan;
                }
            }
        }
        if !removed {
            return false;
        }
    }
}
