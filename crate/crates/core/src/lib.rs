//! Pursuit-evasion on graphs: the Cops and Robber game, exact solving, and
//! winning cop strategies for planar and toroidal graphs.
//!
//! The toroidal strategy plays a teleport variant of the game on a planar
//! cover of the torus graph and projects the resulting moves back down,
//! which caps the cop number of any toroidal graph at three.

pub mod cover;
pub mod fixtures;
pub mod game;
pub mod geom;
pub mod graph;
pub mod robbers;
pub mod solver;
pub mod strategies;

pub use cover::{
    build_cover_window, parse_torus_embedding, validate_torus_embedding, write_torus_embedding,
    CoverError, CoverVertex, CoverWindow, TorusEmbedding, DEFAULT_WINDOW_BUDGET,
};
pub use game::{
    run_match, CopAction, CopStrategy, GameError, GameState, MatchContext, Outcome, Phase,
    RobberStrategy, TeleportRelation, Trace, TurnRecord,
};
pub use geom::{Point, Segment};
pub use graph::{bfs, parse_edge_list, shortest_path, DistanceMap, Graph, GraphError, Path, VertexId};
pub use solver::{
    cop_number, is_dismantlable, optimal_cops, optimal_robber, solve_game, CaptureTable, SolvePhase,
    SolverError, StateKey,
};
