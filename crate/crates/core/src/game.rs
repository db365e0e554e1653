//! Rule engine for Cops and Robber and its teleport variant, plus the match
//! runner and trace recording.
//!
//! Cops place first, then the robber; in every turn the cops move first.
//! Capture is checked after both half-turns: a cop moving onto the robber
//! and the robber moving onto a cop both end the game.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// Partition of the vertex set; cops may jump within their class before
/// moving. For a cover window the class of a vertex is its base projection.
#[derive(Debug, Clone)]
pub struct TeleportRelation {
    class_of: Vec<u32>,
}

impl TeleportRelation {
    pub fn new(class_of: Vec<u32>) -> TeleportRelation {
        TeleportRelation { class_of }
    }

    /// Identity relation: every class a singleton. With this relation the
    /// teleport game coincides with the classic game.
    pub fn identity(n: usize) -> TeleportRelation {
        TeleportRelation {
            class_of: (0..n as u32).collect(),
        }
    }

    pub fn class(&self, v: VertexId) -> u32 {
        self.class_of[v.idx()]
    }

    pub fn equivalent(&self, u: VertexId, v: VertexId) -> bool {
        self.class_of[u.idx()] == self.class_of[v.idx()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    CopsToPlace,
    RobberToPlace,
    CopsToMove,
    RobberToMove,
    Terminal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CopAction {
    /// 0-based cop index.
    pub cop: usize,
    pub teleport_to: Option<VertexId>,
    pub move_to: VertexId,
}

impl CopAction {
    pub fn stay(cop: usize, at: VertexId) -> CopAction {
        CopAction { cop, teleport_to: None, move_to: at }
    }

    pub fn step(cop: usize, to: VertexId) -> CopAction {
        CopAction { cop, teleport_to: None, move_to: to }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Caught { turn: u32, cop: usize },
    Timeout { max_moves: u32 },
    RobberWinsDeclared,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    pub cops: Vec<VertexId>,
    pub robber: Option<VertexId>,
    pub turn: u32,
    pub phase: Phase,
    pub outcome: Option<Outcome>,
}

impl GameState {
    pub fn new(k: usize) -> GameState {
        assert!(k >= 1);
        GameState {
            cops: Vec::with_capacity(k),
            robber: None,
            turn: 0,
            phase: Phase::CopsToPlace,
            outcome: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    Cops,
    Robber,
}

#[derive(Debug, Error)]
pub enum GameError {
    #[error("cop {cop}: {msg}")]
    CopRuleViolation { cop: usize, msg: String },
    #[error("robber: {0}")]
    RobberRuleViolation(String),
    #[error("wrong phase: expected {0:?}")]
    WrongPhase(Phase),
    #[error("strategy fault ({player:?}): {msg}")]
    StrategyFault { player: Player, msg: String },
    #[error("trace parse error at line {line}: {msg}")]
    TraceParse { line: usize, msg: String },
    #[error("replay mismatch: {0}")]
    ReplayMismatch(String),
}

/// One full turn as recorded in a trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TurnRecord {
    Cops { turn: u32, actions: Vec<CopAction> },
    Robber { turn: u32, to: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub k: usize,
    pub n_vertices: usize,
    pub max_moves: u32,
    pub cop_placement: Vec<VertexId>,
    pub robber_placement: VertexId,
    pub turns: Vec<TurnRecord>,
    pub outcome: Outcome,
}

pub fn place_cops(state: &mut GameState, k: usize, positions: &[VertexId], graph: &Graph) -> Result<(), GameError> {
    if state.phase != Phase::CopsToPlace {
        return Err(GameError::WrongPhase(Phase::CopsToPlace));
    }
    if positions.len() != k {
        return Err(GameError::CopRuleViolation {
            cop: 0,
            msg: format!("expected {} placements, got {}", k, positions.len()),
        });
    }
    for (i, &p) in positions.iter().enumerate() {
        if !graph.contains(p) {
            return Err(GameError::CopRuleViolation { cop: i, msg: format!("invalid vertex {p}") });
        }
    }
    state.cops = positions.to_vec();
    state.phase = Phase::RobberToPlace;
    Ok(())
}

pub fn place_robber(state: &mut GameState, at: VertexId, graph: &Graph) -> Result<(), GameError> {
    if state.phase != Phase::RobberToPlace {
        return Err(GameError::WrongPhase(Phase::RobberToPlace));
    }
    if !graph.contains(at) {
        return Err(GameError::RobberRuleViolation(format!("invalid vertex {at}")));
    }
    state.robber = Some(at);
    if let Some(cop) = state.cops.iter().position(|&c| c == at) {
        state.outcome = Some(Outcome::Caught { turn: 0, cop });
        state.phase = Phase::Terminal;
    } else {
        state.phase = Phase::CopsToMove;
    }
    Ok(())
}

/// Applies one cop half-turn: each cop may teleport within its class (only
/// when a relation is supplied) and then move within a closed neighborhood.
pub fn apply_cop_turn(
    state: &mut GameState,
    graph: &Graph,
    rel: Option<&TeleportRelation>,
    actions: &[CopAction],
) -> Result<(), GameError> {
    if state.phase != Phase::CopsToMove {
        return Err(GameError::WrongPhase(Phase::CopsToMove));
    }
    let k = state.cops.len();
    if actions.len() != k {
        return Err(GameError::CopRuleViolation {
            cop: 0,
            msg: format!("expected {} actions, got {}", k, actions.len()),
        });
    }
    let mut seen = vec![false; k];
    let mut new_positions = state.cops.clone();
    for a in actions {
        if a.cop >= k || seen[a.cop] {
            return Err(GameError::CopRuleViolation {
                cop: a.cop,
                msg: "bad or repeated cop index".into(),
            });
        }
        seen[a.cop] = true;
        let current = state.cops[a.cop];
        let from = match a.teleport_to {
            None => current,
            Some(tp) => {
                let Some(rel) = rel else {
                    return Err(GameError::CopRuleViolation {
                        cop: a.cop,
                        msg: "teleport in a game without a teleport relation".into(),
                    });
                };
                if !graph.contains(tp) || !rel.equivalent(tp, current) {
                    return Err(GameError::CopRuleViolation {
                        cop: a.cop,
                        msg: format!("teleport target {tp} not equivalent to {current}"),
                    });
                }
                tp
            }
        };
        if a.move_to != from && !graph.adjacent(from, a.move_to) {
            return Err(GameError::CopRuleViolation {
                cop: a.cop,
                msg: format!("move {from} -> {} not within a closed neighborhood", a.move_to),
            });
        }
        new_positions[a.cop] = a.move_to;
    }
    state.cops = new_positions;
    state.turn += 1;
    let robber = state.robber.expect("robber placed");
    if let Some(cop) = state.cops.iter().position(|&c| c == robber) {
        state.outcome = Some(Outcome::Caught { turn: state.turn, cop });
        state.phase = Phase::Terminal;
    } else {
        state.phase = Phase::RobberToMove;
    }
    Ok(())
}

/// Applies the robber half-turn. Stepping onto a cop is legal and loses.
pub fn apply_robber_turn(
    state: &mut GameState,
    graph: &Graph,
    to: VertexId,
) -> Result<(), GameError> {
    if state.phase != Phase::RobberToMove {
        return Err(GameError::WrongPhase(Phase::RobberToMove));
    }
    let robber = state.robber.expect("robber placed");
    if to != robber && !graph.adjacent(robber, to) {
        return Err(GameError::RobberRuleViolation(format!(
            "move {robber} -> {to} not within a closed neighborhood"
        )));
    }
    state.robber = Some(to);
    if let Some(cop) = state.cops.iter().position(|&c| c == to) {
        state.outcome = Some(Outcome::Caught { turn: state.turn, cop });
        state.phase = Phase::Terminal;
    } else {
        state.phase = Phase::CopsToMove;
    }
    Ok(())
}

/// The vertex of a shortest path `P` at distance `min(robber_dist_from_u, D)`
/// from its `u`-end.
pub fn shadow_position(path: &crate::graph::Path, robber_dist_from_u: u32) -> VertexId {
    let verts = path.vertices();
    assert!(!verts.is_empty(), "shadow of an empty path");
    let i = (robber_dist_from_u as usize).min(verts.len() - 1);
    verts[i]
}

/// Everything a strategy gets to see besides the evolving trace.
pub struct MatchContext<'a> {
    pub graph: &'a Graph,
    pub rel: Option<&'a TeleportRelation>,
    pub k: usize,
    pub max_moves: u32,
}

pub trait CopStrategy {
    fn place(&mut self, ctx: &MatchContext) -> Result<Vec<VertexId>, GameError>;
    fn actions(
        &mut self,
        ctx: &MatchContext,
        state: &GameState,
        history: &[TurnRecord],
    ) -> Result<Vec<CopAction>, GameError>;
}

pub trait RobberStrategy {
    fn place(&mut self, ctx: &MatchContext, cops: &[VertexId]) -> Result<VertexId, GameError>;
    fn turn(
        &mut self,
        ctx: &MatchContext,
        state: &GameState,
        history: &[TurnRecord],
    ) -> Result<VertexId, GameError>;
}

/// Default move cap for an n-vertex arena with k cops.
pub fn default_max_moves(n: usize, k: usize) -> u32 {
    (50 * (n + k)) as u32
}

/// Plays placement then alternating turns until capture or the move cap.
pub fn run_match(
    graph: &Graph,
    rel: Option<&TeleportRelation>,
    cops: &mut dyn CopStrategy,
    robber: &mut dyn RobberStrategy,
    k: usize,
    max_moves: u32,
) -> Result<Trace, GameError> {
    assert!(max_moves >= 1);
    let ctx = MatchContext { graph, rel, k, max_moves };
    let mut state = GameState::new(k);
    let cop_placement = cops.place(&ctx)?;
    place_cops(&mut state, k, &cop_placement, graph)?;
    let robber_placement = robber.place(&ctx, &state.cops)?;
    place_robber(&mut state, robber_placement, graph)?;
    let mut turns = Vec::new();
    while state.outcome.is_none() {
        if state.turn >= max_moves {
            state.outcome = Some(Outcome::Timeout { max_moves });
            break;
        }
        let actions = cops.actions(&ctx, &state, &turns)?;
        apply_cop_turn(&mut state, graph, rel, &actions)?;
        turns.push(TurnRecord::Cops { turn: state.turn, actions });
        if state.outcome.is_some() {
            break;
        }
        let to = robber.turn(&ctx, &state, &turns)?;
        apply_robber_turn(&mut state, graph, to)?;
        turns.push(TurnRecord::Robber { turn: state.turn, to });
    }
    Ok(Trace {
        k,
        n_vertices: graph.vertex_count(),
        max_moves,
        cop_placement,
        robber_placement,
        turns,
        outcome: state.outcome.expect("loop exits with outcome"),
    })
}

/// Feeds a trace back through the rule engine and checks that every move is
/// legal and the outcome is reproduced.
pub fn replay(
    graph: &Graph,
    rel: Option<&TeleportRelation>,
    trace: &Trace,
) -> Result<(), GameError> {
    let mut state = GameState::new(trace.k);
    place_cops(&mut state, trace.k, &trace.cop_placement, graph)?;
    place_robber(&mut state, trace.robber_placement, graph)?;
    for rec in &trace.turns {
        if state.outcome.is_some() {
            return Err(GameError::ReplayMismatch("moves after terminal state".into()));
        }
        match rec {
            TurnRecord::Cops { turn, actions } => {
                apply_cop_turn(&mut state, graph, rel, actions)?;
                if state.turn != *turn {
                    return Err(GameError::ReplayMismatch(format!(
                        "cop turn stamp {} vs engine {}",
                        turn, state.turn
                    )));
                }
            }
            TurnRecord::Robber { turn, to } => {
                apply_robber_turn(&mut state, graph, *to)?;
                if state.turn != *turn {
                    return Err(GameError::ReplayMismatch(format!(
                        "robber turn stamp {} vs engine {}",
                        turn, state.turn
                    )));
                }
            }
        }
    }
    let final_outcome = state.outcome.unwrap_or(if state.turn >= trace.max_moves {
        Outcome::Timeout { max_moves: trace.max_moves }
    } else {
        Outcome::RobberWinsDeclared
    });
    if final_outcome != trace.outcome {
        return Err(GameError::ReplayMismatch(format!(
            "outcome {:?} vs recorded {:?}",
            final_outcome, trace.outcome
        )));
    }
    Ok(())
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Caught { turn, cop } => write!(f, "OUTCOME CAUGHT {} {}", turn, cop),
            Outcome::Timeout { max_moves } => write!(f, "OUTCOME TIMEOUT {}", max_moves),
            Outcome::RobberWinsDeclared => write!(f, "OUTCOME ROBBER"),
        }
    }
}

/// Trace text format, line oriented:
/// header `k n maxMoves`; `PLACE COPS v1 .. vk`; `PLACE ROBBER r`; then
/// alternating `COPS t i tp mv ...` (tp is `-` for no teleport) and
/// `ROBBER t v`; final outcome line.
pub fn write_trace(trace: &Trace) -> String {
    let mut out = format!("{} {} {}\n", trace.k, trace.n_vertices, trace.max_moves);
    out.push_str("PLACE COPS");
    for v in &trace.cop_placement {
        out.push_str(&format!(" {v}"));
    }
    out.push('\n');
    out.push_str(&format!("PLACE ROBBER {}\n", trace.robber_placement));
    for rec in &trace.turns {
        match rec {
            TurnRecord::Cops { turn, actions } => {
                out.push_str(&format!("COPS {turn}"));
                for a in actions {
                    match a.teleport_to {
                        Some(tp) => out.push_str(&format!(" {} {} {}", a.cop, tp, a.move_to)),
                        None => out.push_str(&format!(" {} - {}", a.cop, a.move_to)),
                    }
                }
                out.push('\n');
            }
            TurnRecord::Robber { turn, to } => {
                out.push_str(&format!("ROBBER {turn} {to}\n"));
            }
        }
    }
    out.push_str(&format!("{}\n", trace.outcome));
    out
}

pub fn parse_trace(text: &str) -> Result<Trace, GameError> {
    let err = |line: usize, msg: &str| GameError::TraceParse { line, msg: msg.to_owned() };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| err(0, "empty trace"))?;
    let hdr: Vec<u64> = header
        .split_whitespace()
        .map(|t| t.parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| err(hline, "expected `k n maxMoves`"))?;
    if hdr.len() != 3 {
        return Err(err(hline, "expected `k n maxMoves`"));
    }
    let (k, n_vertices, max_moves) = (hdr[0] as usize, hdr[1] as usize, hdr[2] as u32);
    let (l, cop_line) = lines.next().ok_or_else(|| err(0, "missing PLACE COPS"))?;
    let cop_placement: Vec<VertexId> = cop_line
        .strip_prefix("PLACE COPS")
        .ok_or_else(|| err(l, "expected PLACE COPS"))?
        .split_whitespace()
        .map(|t| t.parse::<u32>().map(VertexId))
        .collect::<Result<_, _>>()
        .map_err(|_| err(l, "bad vertex id"))?;
    let (l, rob_line) = lines.next().ok_or_else(|| err(0, "missing PLACE ROBBER"))?;
    let robber_placement = rob_line
        .strip_prefix("PLACE ROBBER ")
        .and_then(|t| t.trim().parse::<u32>().ok())
        .map(VertexId)
        .ok_or_else(|| err(l, "expected PLACE ROBBER"))?;
    let mut turns = Vec::new();
    let mut outcome = None;
    for (l, line) in lines {
        let mut it = line.split_whitespace();
        match it.next() {
            Some("COPS") => {
                let turn: u32 = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(l, "bad turn stamp"))?;
                let rest: Vec<&str> = it.collect();
                if rest.len() != 3 * k {
                    return Err(err(l, "wrong number of cop action fields"));
                }
                let mut actions = Vec::with_capacity(k);
                for chunk in rest.chunks(3) {
                    let cop: usize = chunk[0].parse().map_err(|_| err(l, "bad cop index"))?;
                    let teleport_to = if chunk[1] == "-" {
                        None
                    } else {
                        Some(VertexId(chunk[1].parse().map_err(|_| err(l, "bad teleport"))?))
                    };
                    let move_to =
                        VertexId(chunk[2].parse().map_err(|_| err(l, "bad move target"))?);
                    actions.push(CopAction { cop, teleport_to, move_to });
                }
                turns.push(TurnRecord::Cops { turn, actions });
            }
            Some("ROBBER") => {
                let turn: u32 = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(l, "bad turn stamp"))?;
                let to = VertexId(
                    it.next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err(l, "bad robber move"))?,
                );
                turns.push(TurnRecord::Robber { turn, to });
            }
            Some("OUTCOME") => {
                outcome = Some(match it.next() {
                    Some("CAUGHT") => {
                        let turn: u32 = it
                            .next()
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(|| err(l, "bad outcome turn"))?;
                        let cop: usize = it
                            .next()
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(|| err(l, "bad outcome cop"))?;
                        Outcome::Caught { turn, cop }
                    }
                    Some("TIMEOUT") => {
                        let max_moves: u32 = it
                            .next()
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(|| err(l, "bad timeout turn"))?;
                        Outcome::Timeout { max_moves }
                    }
                    Some("ROBBER") => Outcome::RobberWinsDeclared,
                    _ => return Err(err(l, "unknown outcome")),
                });
            }
            _ => return Err(err(l, "unknown record")),
        }
    }
    Ok(Trace {
        k,
        n_vertices,
        max_moves,
        cop_placement,
        robber_placement,
        turns,
        outcome: outcome.ok_or_else(|| err(0, "missing OUTCOME"))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    struct FixedCops {
        placement: Vec<VertexId>,
        moves: Vec<Vec<CopAction>>,
        i: usize,
    }

    impl CopStrategy for FixedCops {
        fn place(&mut self, _ctx: &MatchContext) -> Result<Vec<VertexId>, GameError> {
            Ok(self.placement.clone())
        }
        fn actions(
            &mut self,
            _ctx: &MatchContext,
            state: &GameState,
            _history: &[TurnRecord],
        ) -> Result<Vec<CopAction>, GameError> {
            let out = self
                .moves
                .get(self.i)
                .cloned()
                .unwrap_or_else(|| {
                    state
                        .cops
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| CopAction::stay(i, c))
                        .collect()
                });
            self.i += 1;
            Ok(out)
        }
    }

    struct FixedRobber {
        placement: VertexId,
        moves: Vec<VertexId>,
        i: usize,
    }

    impl RobberStrategy for FixedRobber {
        fn place(&mut self, _ctx: &MatchContext, _cops: &[VertexId]) -> Result<VertexId, GameError> {
            Ok(self.placement)
        }
        fn turn(
            &mut self,
            _ctx: &MatchContext,
            state: &GameState,
            _history: &[TurnRecord],
        ) -> Result<VertexId, GameError> {
            let out = self.moves.get(self.i).copied().unwrap_or(state.robber.unwrap());
            self.i += 1;
            Ok(out)
        }
    }

    #[test]
    fn cop_moves_onto_robber_catches() {
        let g = fixtures::complete(4);
        let mut state = GameState::new(1);
        place_cops(&mut state, 1, &[VertexId(0)], &g).unwrap();
        place_robber(&mut state, VertexId(2), &g).unwrap();
        apply_cop_turn(&mut state, &g, None, &[CopAction::step(0, VertexId(2))]).unwrap();
        assert_eq!(state.outcome, Some(Outcome::Caught { turn: 1, cop: 0 }));
    }

    #[test]
    fn illegal_teleports_rejected() {
        let g = fixtures::cycle(4);
        let mut state = GameState::new(1);
        place_cops(&mut state, 1, &[VertexId(0)], &g).unwrap();
        place_robber(&mut state, VertexId(2), &g).unwrap();
        // teleport in a classic game
        let a = CopAction { cop: 0, teleport_to: Some(VertexId(2)), move_to: VertexId(2) };
        assert!(matches!(
            apply_cop_turn(&mut state.clone(), &g, None, &[a]),
            Err(GameError::CopRuleViolation { .. })
        ));
        // teleport to a non-equivalent vertex
        let rel = TeleportRelation::identity(4);
        assert!(matches!(
            apply_cop_turn(&mut state, &g, Some(&rel), &[a]),
            Err(GameError::CopRuleViolation { .. })
        ));
    }

    #[test]
    fn robber_rules() {
        let g = fixtures::cycle(4);
        let mut state = GameState::new(1);
        place_cops(&mut state, 1, &[VertexId(0)], &g).unwrap();
        place_robber(&mut state, VertexId(2), &g).unwrap();
        apply_cop_turn(&mut state, &g, None, &[CopAction::step(0, VertexId(1))]).unwrap();
        // staying put is legal
        apply_robber_turn(&mut state, &g, VertexId(2)).unwrap();
        assert!(state.outcome.is_none());
        apply_cop_turn(&mut state, &g, None, &[CopAction::stay(0, VertexId(1))]).unwrap();
        // moving to a non-neighbor is not
        assert!(apply_robber_turn(&mut state.clone(), &g, VertexId(0)).is_err());
        // stepping onto a cop loses immediately
        apply_robber_turn(&mut state, &g, VertexId(1)).unwrap();
        assert_eq!(state.outcome, Some(Outcome::Caught { turn: 2, cop: 0 }));
    }

    #[test]
    fn identity_relation_matches_classic_moves() {
        let g = fixtures::cycle(5);
        let rel = TeleportRelation::identity(5);
        for mv in 0..5u32 {
            let mut s1 = GameState::new(1);
            place_cops(&mut s1, 1, &[VertexId(0)], &g).unwrap();
            place_robber(&mut s1, VertexId(2), &g).unwrap();
            let mut s2 = s1.clone();
            let a = CopAction::step(0, VertexId(mv));
            let classic = apply_cop_turn(&mut s1, &g, None, &[a]);
            let teleg = apply_cop_turn(&mut s2, &g, Some(&rel), &[a]);
            assert_eq!(classic.is_ok(), teleg.is_ok(), "move to {mv}");
        }
    }

    #[test]
    fn k4_one_cop_catches_at_turn_one() {
        let g = fixtures::complete(4);
        let mut cops = FixedCops {
            placement: vec![VertexId(0)],
            moves: vec![vec![CopAction::step(0, VertexId(1))]],
            i: 0,
        };
        let mut robber = FixedRobber { placement: VertexId(1), moves: vec![], i: 0 };
        let trace = run_match(&g, None, &mut cops, &mut robber, 1, 10).unwrap();
        assert_eq!(trace.outcome, Outcome::Caught { turn: 1, cop: 0 });
        replay(&g, None, &trace).unwrap();
    }

    #[test]
    fn trace_roundtrip_and_replay() {
        let g = fixtures::cycle(4);
        let mut cops = FixedCops {
            placement: vec![VertexId(0)],
            moves: vec![
                vec![CopAction::step(0, VertexId(1))],
                vec![CopAction::step(0, VertexId(2))],
            ],
            i: 0,
        };
        let mut robber = FixedRobber {
            placement: VertexId(2),
            moves: vec![VertexId(3), VertexId(0)],
            i: 0,
        };
        let trace = run_match(&g, None, &mut cops, &mut robber, 1, 2).unwrap();
        assert_eq!(trace.outcome, Outcome::Timeout { max_moves: 2 });
        let text = write_trace(&trace);
        let parsed = parse_trace(&text).unwrap();
        assert_eq!(parsed, trace);
        replay(&g, None, &trace).unwrap();
        assert_eq!(write_trace(&parsed), text);
    }

    #[test]
    fn shadow_position_clamps() {
        let g = fixtures::path_graph(5);
        let p = crate::graph::shortest_path(&g, VertexId(0), VertexId(4)).unwrap();
        assert_eq!(shadow_position(&p, 0), VertexId(0));
        assert_eq!(shadow_position(&p, 2), VertexId(2));
        assert_eq!(shadow_position(&p, 9), VertexId(4));
    }
}
