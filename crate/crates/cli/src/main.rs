//! `pursuit`: exact cop-number solving and strategy simulation for
//! Cops and Robber on finite graphs and torus embeddings.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pursuit_core::cover::{
    build_cover_window, parse_torus_embedding, validate_torus_embedding, window_svg,
    TorusEmbedding, DEFAULT_WINDOW_BUDGET,
};
use pursuit_core::game::{
    default_max_moves, parse_trace, replay, run_match, write_trace, CopStrategy, GameError,
    Outcome, RobberStrategy, Trace,
};
use pursuit_core::graph::{bfs, parse_edge_list, Graph, VertexId};
use pursuit_core::robbers::{
    GreedyRobber, InteractiveRobber, RandomRobber, ScriptedRobber, TableRobber,
};
use pursuit_core::solver::{
    cop_number_with_budget, optimal_cops, solve_game_with_budget, CaptureTable,
    DEFAULT_STATE_BUDGET,
};
use pursuit_core::strategies::{GuardController, Planar3, Toroidal3};

const EXIT_TIMEOUT: u8 = 2;
const EXIT_RULE_VIOLATION: u8 = 3;
const EXIT_STRATEGY_FAULT: u8 = 4;

#[derive(Parser)]
#[command(name = "pursuit", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ArenaType {
    /// Decide by file extension (`.tor` = torus embedding).
    Auto,
    Graph,
    Tor,
}

#[derive(Args)]
struct ArenaArgs {
    /// Edge-list graph or `.tor` torus embedding.
    arena: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    arena_type: ArenaType,
}

#[derive(Subcommand)]
enum Command {
    /// Exact cop number of a graph, searched up to --max-k.
    Copnumber {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
    },
    /// Solve the k-cop game and report the game value.
    Solve {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Write the full capture table as text.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Run one cops-vs-robber match and print the outcome.
    Simulate {
        #[command(flatten)]
        arena: ArenaArgs,
        /// Cop strategy: toroidal3[:margin=N], planar3, guard-path[:from=U,to=V], optimal.
        #[arg(long, default_value = "toroidal3")]
        cops: String,
        /// Robber strategy: greedy, random:seed=S, optimal, scripted:file=F.
        #[arg(long, default_value = "greedy")]
        robber: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Move cap (default: strategy-appropriate).
        #[arg(long)]
        max_moves: Option<u32>,
        /// Write the trace to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Re-read the written trace and verify it replays identically.
        #[arg(long, requires = "trace")]
        replay: bool,
    },
    /// Materialize a cover window and export it.
    Cover {
        embedding: PathBuf,
        #[arg(long)]
        radius: u32,
        /// Write edge list to OUT and positions to OUT.pos.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write an SVG rendering.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check the three torus-embedding conditions.
    Validate { embedding: PathBuf },
    /// Interactive match: you play the robber in the terminal.
    Play {
        #[command(flatten)]
        arena: ArenaArgs,
        #[arg(long, default_value = "toroidal3")]
        cops: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        max_moves: Option<u32>,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // usage problems are exit 1, not clap's default 2
            let _ = e.print();
            return ExitCode::FAILURE;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn state_budget() -> Result<u64, String> {
    match std::env::var("PURSUIT_STATE_BUDGET") {
        Ok(s) => s
            .parse()
            .map_err(|_| format!("PURSUIT_STATE_BUDGET is not an integer: {s:?}")),
        Err(_) => Ok(DEFAULT_STATE_BUDGET),
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    parse_edge_list(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_embedding(path: &Path) -> Result<TorusEmbedding, String> {
    parse_torus_embedding(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// The game board plus, for `.tor` inputs, the embedding behind it.
struct Arena {
    graph: Graph,
    emb: Option<TorusEmbedding>,
}

fn load_arena(args: &ArenaArgs) -> Result<Arena, String> {
    let is_tor = match args.arena_type {
        ArenaType::Graph => false,
        ArenaType::Tor => true,
        ArenaType::Auto => args.arena.extension().is_some_and(|e| e == "tor"),
    };
    if is_tor {
        let emb = load_embedding(&args.arena)?;
        Ok(Arena { graph: emb.base().clone(), emb: Some(emb) })
    } else {
        Ok(Arena { graph: load_graph(&args.arena)?, emb: None })
    }
}

/// Splits `name:key=value,key=value` into the name and its parameters.
fn parse_spec(spec: &str) -> Result<(&str, HashMap<&str, &str>), String> {
    let (name, rest) = match spec.split_once(':') {
        None => return Ok((spec, HashMap::new())),
        Some(p) => p,
    };
    let mut params = HashMap::new();
    for kv in rest.split(',') {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| format!("malformed parameter {kv:?} in {spec:?} (want key=value)"))?;
        params.insert(k, v);
    }
    Ok((name, params))
}

fn param<T: std::str::FromStr>(
    params: &HashMap<&str, &str>,
    key: &str,
) -> Result<Option<T>, String> {
    match params.get(key) {
        None => Ok(None),
        Some(v) => v
            .parse()
            .map(Some)
            .map_err(|_| format!("parameter {key}={v} is not valid")),
    }
}

fn reject_unknown(params: &HashMap<&str, &str>, known: &[&str], who: &str) -> Result<(), String> {
    for k in params.keys() {
        if !known.contains(k) {
            return Err(format!("unknown parameter {k:?} for strategy {who}"));
        }
    }
    Ok(())
}

/// Diagnostic single-cop strategy: guards the shortest path between two
/// vertices and otherwise lets the match time out.
struct GuardPathCops {
    from: VertexId,
    ctrl: Option<GuardController>,
    path: Vec<VertexId>,
}

impl GuardPathCops {
    fn new(graph: &Graph, from: VertexId, to: VertexId) -> Result<GuardPathCops, String> {
        let dm = bfs(graph, from);
        if !dm.reachable(to) {
            return Err(format!("guard-path: {to} unreachable from {from}"));
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = dm.parent(cur).expect("on a BFS tree");
            path.push(cur);
        }
        path.reverse();
        Ok(GuardPathCops { from, ctrl: None, path })
    }
}

impl CopStrategy for GuardPathCops {
    fn place(
        &mut self,
        ctx: &pursuit_core::game::MatchContext,
    ) -> Result<Vec<VertexId>, GameError> {
        if ctx.k != 1 {
            return Err(GameError::StrategyFault {
                player: pursuit_core::game::Player::Cops,
                msg: format!("guard-path is a single-cop diagnostic, got k={}", ctx.k),
            });
        }
        Ok(vec![self.from])
    }

    fn actions(
        &mut self,
        ctx: &pursuit_core::game::MatchContext,
        state: &pursuit_core::game::GameState,
        _history: &[pursuit_core::game::TurnRecord],
    ) -> Result<Vec<pursuit_core::game::CopAction>, GameError> {
        let robber = state.robber.expect("robber placed");
        let ctrl = self.ctrl.get_or_insert_with(|| {
            let dist = bfs(ctx.graph, self.from).raw_dist().to_vec();
            GuardController::new(
                ctx.graph,
                dist,
                self.path.clone(),
                robber,
                &[state.cops[0]],
                None,
            )
        });
        Ok(vec![ctrl.action(ctx.graph, 0, state.cops[0], robber, state.turn + 1)])
    }
}

/// Solver table for the arena, shared by `optimal` cops and robbers.
fn solve_arena(graph: &Graph, k: usize) -> Result<CaptureTable, String> {
    solve_game_with_budget(graph, k, state_budget()?).map_err(|e| e.to_string())
}

enum CopChoice {
    Toroidal(Toroidal3),
    Planar(Box<Planar3>),
    GuardPath(GuardPathCops),
    Optimal(Box<CaptureTable>),
}

fn make_cops(spec: &str, arena: &Arena, k: usize) -> Result<CopChoice, String> {
    let (name, params) = parse_spec(spec)?;
    match name {
        "toroidal3" => {
            reject_unknown(&params, &["margin"], name)?;
            let emb = arena
                .emb
                .clone()
                .ok_or("toroidal3 needs a .tor arena (torus embedding)")?;
            let mut s = Toroidal3::new(emb);
            if let Some(m) = param::<u32>(&params, "margin")? {
                s = s.with_margin(m);
            }
            Ok(CopChoice::Toroidal(s))
        }
        "planar3" => {
            reject_unknown(&params, &[], name)?;
            let emb = arena
                .emb
                .as_ref()
                .ok_or("planar3 needs a .tor arena for vertex positions")?;
            let pos = emb.base().vertices().map(|v| emb.position(v)).collect();
            Ok(CopChoice::Planar(Box::new(Planar3::new(pos))))
        }
        "guard-path" => {
            reject_unknown(&params, &["from", "to"], name)?;
            let from = VertexId(param::<u32>(&params, "from")?.unwrap_or(0));
            let to = match param::<u32>(&params, "to")? {
                Some(t) => VertexId(t),
                // default: a farthest vertex, so the path is a diameter ray
                None => {
                    let dm = bfs(&arena.graph, from);
                    arena
                        .graph
                        .vertices()
                        .filter(|&v| dm.reachable(v))
                        .max_by_key(|&v| (dm.dist(v), std::cmp::Reverse(v.0)))
                        .unwrap()
                }
            };
            Ok(CopChoice::GuardPath(GuardPathCops::new(&arena.graph, from, to)?))
        }
        "optimal" => {
            reject_unknown(&params, &[], name)?;
            Ok(CopChoice::Optimal(Box::new(solve_arena(&arena.graph, k)?)))
        }
        other => Err(format!("unknown cop strategy {other:?}")),
    }
}

fn make_robber(
    spec: &str,
    arena: &Arena,
    k: usize,
) -> Result<Box<dyn RobberStrategy>, String> {
    let (name, params) = parse_spec(spec)?;
    match name {
        "greedy" => {
            reject_unknown(&params, &[], name)?;
            Ok(Box::new(GreedyRobber))
        }
        "random" => {
            reject_unknown(&params, &["seed"], name)?;
            let seed = param::<u64>(&params, "seed")?.unwrap_or(0);
            Ok(Box::new(RandomRobber::new(seed)))
        }
        "optimal" => {
            reject_unknown(&params, &[], name)?;
            Ok(Box::new(TableRobber::new(solve_arena(&arena.graph, k)?)))
        }
        "human" => {
            reject_unknown(&params, &[], name)?;
            Ok(Box::new(InteractiveRobber::new(
                std::io::stdin().lock(),
                std::io::stdout(),
            )))
        }
        "scripted" => {
            reject_unknown(&params, &["file"], name)?;
            let file = params
                .get("file")
                .ok_or("scripted robber needs file=PATH")?;
            let text = read(Path::new(file))?;
            Ok(Box::new(ScriptedRobber::parse(&text).map_err(|e| e.to_string())?))
        }
        other => Err(format!("unknown robber strategy {other:?}")),
    }
}

fn default_cap(choice: &CopChoice, arena: &Arena, k: usize) -> Result<u32, String> {
    match choice {
        CopChoice::Toroidal(_) => {
            let emb = arena.emb.as_ref().expect("toroidal3 implies embedding");
            Toroidal3::move_cap(emb).map_err(|e| e.to_string())
        }
        _ => Ok(default_max_moves(arena.graph.vertex_count(), k)),
    }
}

fn outcome_exit(trace: &Trace) -> ExitCode {
    match trace.outcome {
        Outcome::Caught { .. } => ExitCode::SUCCESS,
        Outcome::Timeout { .. } | Outcome::RobberWinsDeclared => ExitCode::from(EXIT_TIMEOUT),
    }
}

fn game_error_exit(e: &GameError) -> ExitCode {
    match e {
        GameError::CopRuleViolation { .. }
        | GameError::RobberRuleViolation(_)
        | GameError::WrongPhase(_) => ExitCode::from(EXIT_RULE_VIOLATION),
        GameError::StrategyFault { .. } => ExitCode::from(EXIT_STRATEGY_FAULT),
        GameError::TraceParse { .. } | GameError::ReplayMismatch(_) => ExitCode::FAILURE,
    }
}

fn run_with(
    arena: &Arena,
    choice: &mut CopChoice,
    robber: &mut dyn RobberStrategy,
    k: usize,
    max_moves: u32,
) -> Result<Trace, GameError> {
    let g = &arena.graph;
    match choice {
        CopChoice::Toroidal(s) => run_match(g, None, s, robber, k, max_moves),
        CopChoice::Planar(s) => run_match(g, None, s.as_mut(), robber, k, max_moves),
        CopChoice::GuardPath(s) => run_match(g, None, s, robber, k, max_moves),
        CopChoice::Optimal(table) => {
            let mut s = optimal_cops(table).map_err(|e| GameError::StrategyFault {
                player: pursuit_core::game::Player::Cops,
                msg: e.to_string(),
            })?;
            run_match(g, None, &mut s, robber, k, max_moves)
        }
    }
}

fn describe(trace: &Trace) {
    match trace.outcome {
        Outcome::Caught { turn, cop } => println!("CAUGHT turn {turn} by cop {cop}"),
        Outcome::Timeout { max_moves } => println!("TIMEOUT after {max_moves} moves"),
        Outcome::RobberWinsDeclared => println!("ROBBER WINS (declared)"),
    }
}

fn dispatch(cmd: Command) -> Result<ExitCode, String> {
    match cmd {
        Command::Copnumber { graph, max_k } => {
            let g = load_graph(&graph)?;
            match cop_number_with_budget(&g, max_k, state_budget()?).map_err(|e| e.to_string())? {
                Some(c) => println!("{c}"),
                None => println!(">{max_k}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { graph, k, dump } => {
            let g = load_graph(&graph)?;
            let table = solve_arena(&g, k)?;
            let (placement, value) = table.best_placement();
            let ids: Vec<String> = placement.iter().map(|v| v.to_string()).collect();
            match value {
                Some(v) => println!(
                    "cop win: {k} cops catch from placement [{}] in {v} half-turns",
                    ids.join(" ")
                ),
                None => println!("robber win: {k} cops never catch an optimal robber"),
            }
            if let Some(path) = dump {
                write_file(&path, &table.dump())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate { arena, cops, robber, k, max_moves, trace, replay: verify } => {
            let arena = load_arena(&arena)?;
            let mut choice = make_cops(&cops, &arena, k)?;
            let mut rob = make_robber(&robber, &arena, k)?;
            let cap = match max_moves {
                Some(m) => m,
                None => default_cap(&choice, &arena, k)?,
            };
            let result = run_with(&arena, &mut choice, rob.as_mut(), k, cap);
            let t = match result {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(game_error_exit(&e));
                }
            };
            describe(&t);
            if let Some(path) = &trace {
                write_file(path, &write_trace(&t))?;
                if verify {
                    let back = parse_trace(&read(path)?).map_err(|e| e.to_string())?;
                    replay(&arena.graph, None, &back).map_err(|e| e.to_string())?;
                    if back != t {
                        return Err("replayed trace differs from the original".into());
                    }
                    println!("replay ok");
                }
            }
            Ok(outcome_exit(&t))
        }
        Command::Cover { embedding, radius, out, svg } => {
            let emb = load_embedding(&embedding)?;
            let window = build_cover_window(&emb, VertexId(0), radius, DEFAULT_WINDOW_BUDGET)
                .map_err(|e| e.to_string())?;
            println!(
                "window: {} vertices, {} edges, radius {radius}",
                window.graph().vertex_count(),
                window.graph().edge_count()
            );
            if let Some(path) = out {
                let (edges, positions) = pursuit_core::cover::export_window(&window);
                write_file(&path, &edges)?;
                write_file(&path.with_extension("pos"), &positions)?;
            }
            if let Some(path) = svg {
                write_file(&path, &window_svg(&window))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { embedding } => {
            let emb = load_embedding(&embedding)?;
            match validate_torus_embedding(&emb) {
                Ok(()) => {
                    println!("ok");
                    Ok(ExitCode::SUCCESS)
                }
                Err(violations) => {
                    for v in violations {
                        println!("{v}");
                    }
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Play { arena, cops, k, max_moves } => {
            let arena = load_arena(&arena)?;
            let mut choice = make_cops(&cops, &arena, k)?;
            let cap = match max_moves {
                Some(m) => m,
                None => default_cap(&choice, &arena, k)?,
            };
            let stdin = std::io::stdin();
            let mut rob = InteractiveRobber::new(stdin.lock(), std::io::stdout());
            let result = run_with(&arena, &mut choice, &mut rob, k, cap);
            match result {
                Ok(t) => {
                    describe(&t);
                    Ok(outcome_exit(&t))
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(game_error_exit(&e))
                }
            }
        }
    }
}
