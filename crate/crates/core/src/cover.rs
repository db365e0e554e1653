//! Torus embeddings and finite windows of the associated infinite planar
//! cover.
//!
//! A [`TorusEmbedding`] places each vertex in the unit square and records a
//! homology shift per edge: the arc of edge {u, v} (with u < v) runs in the
//! plane from `pos(u)` to `pos(v) + shift` as a straight segment. Unrolling
//! the embedding over all integer translates yields an infinite planar cover
//! of the base graph; [`CoverWindow`] materializes a finite ball of it.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::geom::{point_in_segment_interior, segments_conflict, Point, Segment};
use crate::graph::{bfs, Graph, GraphError, VertexId};

/// Integer translate of a base vertex in the universal cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverVertex {
    pub base: VertexId,
    pub translate: (i64, i64),
}

impl CoverVertex {
    pub fn root(base: VertexId) -> CoverVertex {
        CoverVertex { base, translate: (0, 0) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shift {
    pub sx: i64,
    pub sy: i64,
}

#[derive(Debug, Error)]
pub enum CoverError {
    #[error("vertices {0} and {1} embed at the same point")]
    DistinctPointViolation(u32, u32),
    #[error("arcs of edges {0:?} and {1:?} cross (translate {2:?})")]
    ArcCrossing((u32, u32), (u32, u32), (i64, i64)),
    #[error("vertex {0} lies in the interior of the arc of edge {1:?} (translate {2:?})")]
    PointOnArc(u32, (u32, u32), (i64, i64)),
    #[error("position of vertex {0} outside [0,1)^2")]
    PositionOutOfRange(u32),
    #[error("window budget exceeded: materialized {0} vertices, budget {1}")]
    BudgetExceeded(usize, usize),
    #[error("window exhausted at fringe vertex {0:?}")]
    WindowExhausted(CoverVertex),
    #[error("{0:?} is not in the closed base neighborhood")]
    NotInNeighborhood(VertexId),
    #[error("cover vertex {0:?} not materialized")]
    NotMaterialized(CoverVertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Straight-line embedding of a finite graph on the unit torus.
#[derive(Debug, Clone)]
pub struct TorusEmbedding {
    base: Graph,
    position: Vec<Point>,
    /// shift for the edge (u, v) with u < v, keyed in `Graph::edges` order
    shift: HashMap<(VertexId, VertexId), Shift>,
}

impl TorusEmbedding {
    pub fn new(
        base: Graph,
        position: Vec<Point>,
        shifts: Vec<((u32, u32), (i64, i64))>,
    ) -> Result<TorusEmbedding, CoverError> {
        assert_eq!(position.len(), base.vertex_count());
        for (i, p) in position.iter().enumerate() {
            if !(0.0..1.0).contains(&p.x) || !(0.0..1.0).contains(&p.y) {
                return Err(CoverError::PositionOutOfRange(i as u32));
            }
        }
        let mut shift = HashMap::new();
        for ((u, v), (sx, sy)) in shifts {
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            shift.insert((VertexId(u), VertexId(v)), Shift { sx, sy });
        }
        for (u, v) in base.edges() {
            shift.entry((u, v)).or_insert(Shift { sx: 0, sy: 0 });
        }
        Ok(TorusEmbedding { base, position, shift })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn position(&self, v: VertexId) -> Point {
        self.position[v.idx()]
    }

    /// Shift of the canonical arc of edge {u, v}, oriented from min(u,v).
    pub fn shift(&self, u: VertexId, v: VertexId) -> Shift {
        let key = if u < v { (u, v) } else { (v, u) };
        self.shift[&key]
    }

    /// Shift seen when traversing the edge from `u` to `v`.
    pub fn directed_shift(&self, u: VertexId, v: VertexId) -> Shift {
        let s = self.shift(u, v);
        if u < v {
            s
        } else {
            Shift { sx: -s.sx, sy: -s.sy }
        }
    }

    /// Canonical plane segment of edge (u, v) with u < v, in the central tile.
    pub fn segment(&self, u: VertexId, v: VertexId) -> Segment {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let s = self.shift(u, v);
        Segment::new(
            self.position(u),
            self.position(v).translated(s.sx, s.sy),
        )
    }

    /// Plane position of a cover vertex.
    pub fn cover_position(&self, cv: CoverVertex) -> Point {
        self.position(cv.base).translated(cv.translate.0, cv.translate.1)
    }

    /// Cover neighbor of `cv` along the base edge to `to`.
    pub fn cover_neighbor(&self, cv: CoverVertex, to: VertexId) -> CoverVertex {
        let s = self.directed_shift(cv.base, to);
        CoverVertex {
            base: to,
            translate: (cv.translate.0 + s.sx, cv.translate.1 + s.sy),
        }
    }
}

/// Maximum Euclidean length over all cover edge segments.
#[derive(Debug, Clone, Copy)]
pub struct LengthBound {
    pub r: f64,
}

pub fn edge_length_bound(emb: &TorusEmbedding) -> LengthBound {
    let r = emb
        .base
        .edges()
        .iter()
        .map(|&(u, v)| emb.segment(u, v).length())
        .fold(0.0_f64, f64::max);
    LengthBound { r }
}

/// Checks the three straight-line embedding conditions over a 3x3 block of
/// unit-tile translates: distinct points, internally disjoint arcs, and no
/// vertex interior to an arc.
pub fn validate_torus_embedding(emb: &TorusEmbedding) -> Result<(), Vec<CoverError>> {
    let mut violations = Vec::new();
    let n = emb.base.vertex_count();
    for u in 0..n {
        for v in (u + 1)..n {
            let (p, q) = (emb.position[u], emb.position[v]);
            if (p.x - q.x).abs() < 1e-12 && (p.y - q.y).abs() < 1e-12 {
                violations.push(CoverError::DistinctPointViolation(u as u32, v as u32));
            }
        }
    }
    let edges = emb.base.edges();
    let segs: Vec<Segment> = edges.iter().map(|&(u, v)| emb.segment(u, v)).collect();
    for (i, e1) in edges.iter().enumerate() {
        for (j, e2) in edges.iter().enumerate() {
            if j < i {
                continue;
            }
            for dx in -1..=1_i64 {
                for dy in -1..=1_i64 {
                    if i == j && dx == 0 && dy == 0 {
                        continue;
                    }
                    let t = segs[j].translated(dx, dy);
                    if segments_conflict(&segs[i], &t) {
                        violations.push(CoverError::ArcCrossing(
                            (e1.0 .0, e1.1 .0),
                            (e2.0 .0, e2.1 .0),
                            (dx, dy),
                        ));
                    }
                }
            }
        }
    }
    for (i, e) in edges.iter().enumerate() {
        for v in 0..n {
            for dx in -2..=2_i64 {
                for dy in -2..=2_i64 {
                    let p = emb.position[v].translated(dx, dy);
                    if point_in_segment_interior(&segs[i], p) {
                        violations.push(CoverError::PointOnArc(
                            v as u32,
                            (e.0 .0, e.1 .0),
                            (dx, dy),
                        ));
                    }
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

pub const DEFAULT_WINDOW_BUDGET: usize = 5_000_000;

/// Finite materialized ball of the infinite planar cover.
///
/// Contains every cover vertex within cover-graph distance `radius` of the
/// center plus one extra layer; `fringe` marks materialized vertices with at
/// least one non-materialized cover neighbor.
#[derive(Debug, Clone)]
pub struct CoverWindow {
    emb: TorusEmbedding,
    center: CoverVertex,
    radius: u32,
    graph: Graph,
    by_id: Vec<CoverVertex>,
    id_of: HashMap<CoverVertex, VertexId>,
    fringe: Vec<bool>,
}

impl CoverWindow {
    pub fn embedding(&self) -> &TorusEmbedding {
        &self.emb
    }

    pub fn center(&self) -> CoverVertex {
        self.center
    }

    pub fn center_id(&self) -> VertexId {
        VertexId(0)
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Graph over the materialized cover vertices. Vertex ids are BFS
    /// discovery order from the center, which makes them stable under
    /// enlarging the radius.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cover_vertex(&self, id: VertexId) -> CoverVertex {
        self.by_id[id.idx()]
    }

    pub fn id_of(&self, cv: CoverVertex) -> Option<VertexId> {
        self.id_of.get(&cv).copied()
    }

    /// Base component of the covering map.
    pub fn project(&self, id: VertexId) -> VertexId {
        self.by_id[id.idx()].base
    }

    pub fn is_fringe(&self, id: VertexId) -> bool {
        self.fringe[id.idx()]
    }

    pub fn position(&self, id: VertexId) -> Point {
        self.emb.cover_position(self.by_id[id.idx()])
    }

    /// Unique lift step: the materialized closed-neighborhood member of
    /// `from` projecting to `to_base`.
    pub fn lift_step(&self, from: VertexId, to_base: VertexId) -> Result<VertexId, CoverError> {
        let cv = self.by_id[from.idx()];
        if to_base == cv.base {
            return Ok(from);
        }
        if !self.emb.base.adjacent(cv.base, to_base) {
            return Err(CoverError::NotInNeighborhood(to_base));
        }
        if self.fringe[from.idx()] {
            return Err(CoverError::WindowExhausted(cv));
        }
        let target = self.emb.cover_neighbor(cv, to_base);
        self.id_of(target).ok_or(CoverError::WindowExhausted(cv))
    }

    /// All materialized lifts of `base_v`, sorted by translate.
    pub fn fiber(&self, base_v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<(CoverVertex, VertexId)> = self
            .by_id
            .iter()
            .enumerate()
            .filter(|(_, cv)| cv.base == base_v)
            .map(|(i, &cv)| (cv, VertexId(i as u32)))
            .collect();
        out.sort_by_key(|(cv, _)| cv.translate);
        out.into_iter().map(|(_, id)| id).collect()
    }

    /// Ball sizes |B_center(r)| for r = 0..=up_to.
    pub fn growth_profile(&self, up_to: u32) -> Vec<usize> {
        assert!(up_to <= self.radius, "growth_profile beyond window radius");
        let dm = bfs(&self.graph, self.center_id());
        let mut counts = vec![0usize; up_to as usize + 1];
        for v in self.graph.vertices() {
            if let Some(d) = dm.dist(v) {
                if d <= up_to {
                    counts[d as usize] += 1;
                }
            }
        }
        for i in 1..counts.len() {
            counts[i] += counts[i - 1];
        }
        counts
    }

    /// Per-tile vertex counts keyed by the tile containing each position.
    pub fn tile_counts(&self) -> HashMap<(i64, i64), usize> {
        let mut out = HashMap::new();
        for cv in &self.by_id {
            let p = self.emb.cover_position(*cv);
            *out.entry((p.x.floor() as i64, p.y.floor() as i64)).or_insert(0) += 1;
        }
        out
    }

    /// Exhaustive pairwise crossing check over all materialized edge
    /// segments, bucketed by tile so nearby pairs only are compared.
    pub fn check_geometric_planarity(&self) -> Result<(), (VertexId, VertexId, VertexId, VertexId)> {
        let edges = self.graph.edges();
        let segs: Vec<Segment> = edges
            .iter()
            .map(|&(u, v)| Segment::new(self.position(u), self.position(v)))
            .collect();
        let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (i, s) in segs.iter().enumerate() {
            let mx = ((s.a.x + s.b.x) / 2.0).floor() as i64;
            let my = ((s.a.y + s.b.y) / 2.0).floor() as i64;
            buckets.entry((mx, my)).or_default().push(i);
        }
        let reach = edge_length_bound(&self.emb).r.ceil() as i64 + 1;
        for (&(bx, by), ids) in &buckets {
            for dx in 0..=reach {
                for dy in -reach..=reach {
                    if dx == 0 && dy < 0 {
                        continue;
                    }
                    let Some(other) = buckets.get(&(bx + dx, by + dy)) else {
                        continue;
                    };
                    for &i in ids {
                        for &j in other {
                            if (dx == 0 && dy == 0 && j <= i) || i == j {
                                continue;
                            }
                            if segments_conflict(&segs[i], &segs[j]) {
                                return Err((edges[i].0, edges[i].1, edges[j].0, edges[j].1));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Materializes the ball of cover-graph radius `radius` around
/// `(center_base, (0,0))`, plus one layer to mark the fringe.
pub fn build_cover_window(
    emb: &TorusEmbedding,
    center_base: VertexId,
    radius: u32,
    budget: usize,
) -> Result<CoverWindow, CoverError> {
    let center = CoverVertex::root(center_base);
    let mut by_id: Vec<CoverVertex> = vec![center];
    let mut id_of: HashMap<CoverVertex, VertexId> = HashMap::new();
    id_of.insert(center, VertexId(0));
    let mut dist: Vec<u32> = vec![0];
    let mut queue = VecDeque::new();
    queue.push_back(VertexId(0));
    while let Some(u) = queue.pop_front() {
        let du = dist[u.idx()];
        if du > radius {
            continue; // fringe layer vertices are not expanded further
        }
        let cu = by_id[u.idx()];
        for &nb in emb.base.neighbors(cu.base) {
            let cv = emb.cover_neighbor(cu, nb);
            if let std::collections::hash_map::Entry::Vacant(e) = id_of.entry(cv) {
                let v = VertexId(by_id.len() as u32);
                if by_id.len() >= budget {
                    return Err(CoverError::BudgetExceeded(by_id.len(), budget));
                }
                by_id.push(cv);
                dist.push(du + 1);
                e.insert(v);
                queue.push_back(v);
            }
        }
    }
    // window graph = induced subgraph of the cover on the materialized set
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (i, cu) in by_id.iter().enumerate() {
        for &nb in emb.base.neighbors(cu.base) {
            if let Some(&v) = id_of.get(&emb.cover_neighbor(*cu, nb)) {
                if (i as u32) < v.0 {
                    edges.push((i as u32, v.0));
                }
            }
        }
    }
    edges.sort_unstable();
    let graph = Graph::from_edges(by_id.len(), &edges)?;
    // fringe: any materialized vertex with a non-materialized cover neighbor
    let mut fringe = vec![false; by_id.len()];
    for (i, cv) in by_id.iter().enumerate() {
        for &nb in emb.base.neighbors(cv.base) {
            if !id_of.contains_key(&emb.cover_neighbor(*cv, nb)) {
                fringe[i] = true;
                break;
            }
        }
    }
    Ok(CoverWindow {
        emb: emb.clone(),
        center,
        radius,
        graph,
        by_id,
        id_of,
        fringe,
    })
}

/// Torus embedding text format: line 1 `n m`; n lines `id x y`; m lines
/// `u v sx sy`. Blank lines and `#` comments ignored.
pub fn parse_torus_embedding(text: &str) -> Result<TorusEmbedding, CoverError> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let parse_err = |line: usize, msg: &str| CoverError::Parse { line, msg: msg.to_owned() };
    let (hline, header) = rows.next().ok_or_else(|| parse_err(0, "empty file"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(hline, "expected `n m`"))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(hline, "expected `n m`"))?;
    let mut position = vec![Point::new(0.0, 0.0); n];
    let mut seen = vec![false; n];
    for _ in 0..n {
        let (line, l) = rows.next().ok_or_else(|| parse_err(0, "missing vertex rows"))?;
        let mut it = l.split_whitespace();
        let id: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line, "expected `id x y`"))?;
        let x: f64 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line, "expected `id x y`"))?;
        let y: f64 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line, "expected `id x y`"))?;
        if id >= n || seen[id] {
            return Err(parse_err(line, "bad or repeated vertex id"));
        }
        seen[id] = true;
        position[id] = Point::new(x, y);
    }
    let mut edges = Vec::with_capacity(m);
    let mut shifts = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, l) = rows.next().ok_or_else(|| parse_err(0, "missing edge rows"))?;
        let mut it = l.split_whitespace();
        let mut next_i64 = |what: &str| -> Result<i64, CoverError> {
            it.next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err(line, what))
        };
        let u = next_i64("expected `u v sx sy`")? as u32;
        let v = next_i64("expected `u v sx sy`")? as u32;
        let sx = next_i64("expected `u v sx sy`")?;
        let sy = next_i64("expected `u v sx sy`")?;
        edges.push((u, v));
        shifts.push(((u, v), (sx, sy)));
    }
    if let Some((line, _)) = rows.next() {
        return Err(parse_err(line, "trailing content"));
    }
    let base = Graph::from_edges(n, &edges)?;
    TorusEmbedding::new(base, position, shifts)
}

pub fn write_torus_embedding(emb: &TorusEmbedding) -> String {
    let mut out = format!("{} {}\n", emb.base.vertex_count(), emb.base.edge_count());
    for v in emb.base.vertices() {
        let p = emb.position(v);
        out.push_str(&format!("{} {} {}\n", v, p.x, p.y));
    }
    for (u, v) in emb.base.edges() {
        let s = emb.shift(u, v);
        out.push_str(&format!("{} {} {} {}\n", u, v, s.sx, s.sy));
    }
    out
}

/// Window export: edge-list of the window graph plus a sidecar position
/// table `id base i j x y`.
pub fn export_window(window: &CoverWindow) -> (String, String) {
    let edge_list = crate::graph::write_edge_list(window.graph());
    let mut sidecar = String::new();
    for v in window.graph().vertices() {
        let cv = window.cover_vertex(v);
        let p = window.position(v);
        sidecar.push_str(&format!(
            "{} {} {} {} {} {}\n",
            v, cv.base, cv.translate.0, cv.translate.1, p.x, p.y
        ));
    }
    (edge_list, sidecar)
}

/// Minimal SVG rendering of a window, for eyeballing fixtures.
pub fn window_svg(window: &CoverWindow) -> String {
    let pts: Vec<Point> = window.graph().vertices().map(|v| window.position(v)).collect();
    let min_x = pts.iter().map(|p| p.x).fold(f64::INFINITY, f64::min) - 0.5;
    let max_x = pts.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max) + 0.5;
    let min_y = pts.iter().map(|p| p.y).fold(f64::INFINITY, f64::min) - 0.5;
    let max_y = pts.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max) + 0.5;
    let scale = 100.0;
    let tx = |x: f64| (x - min_x) * scale;
    let ty = |y: f64| (max_y - y) * scale;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\">\n",
        (max_x - min_x) * scale,
        (max_y - min_y) * scale
    );
    for (u, v) in window.graph().edges() {
        let (p, q) = (window.position(u), window.position(v));
        out.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"0.5\"/>\n",
            tx(p.x), ty(p.y), tx(q.x), ty(q.y)
        ));
    }
    for p in &pts {
        out.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"1.5\" fill=\"red\"/>\n",
            tx(p.x), ty(p.y)
        ));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn petersen_embedding_is_valid() {
        let emb = fixtures::petersen_torus();
        assert!(validate_torus_embedding(&emb).is_ok());
    }

    #[test]
    fn duplicate_point_rejected() {
        let base = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let emb = TorusEmbedding::new(
            base,
            vec![Point::new(0.3, 0.3), Point::new(0.3, 0.3)],
            vec![],
        )
        .unwrap();
        let errs = validate_torus_embedding(&emb).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| matches!(e, CoverError::DistinctPointViolation(0, 1))));
    }

    #[test]
    fn k4_crossing_chords_rejected() {
        // square with both diagonals drawn straight: diagonals cross
        let base = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]).unwrap();
        let emb = TorusEmbedding::new(
            base,
            vec![
                Point::new(0.2, 0.2),
                Point::new(0.8, 0.2),
                Point::new(0.8, 0.8),
                Point::new(0.2, 0.8),
            ],
            vec![],
        )
        .unwrap();
        let errs = validate_torus_embedding(&emb).unwrap_err();
        assert!(errs.iter().any(|e| matches!(e, CoverError::ArcCrossing(..))));
        // oracle: the two diagonals alone must conflict
        let d1 = emb.segment(VertexId(0), VertexId(2));
        let d2 = emb.segment(VertexId(1), VertexId(3));
        assert!(segments_conflict(&d1, &d2));
    }

    #[test]
    fn edge_length_bound_examples() {
        let base = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let emb = TorusEmbedding::new(
            base.clone(),
            vec![Point::new(0.0, 0.0), Point::new(0.5, 0.0)],
            vec![],
        )
        .unwrap();
        assert!((edge_length_bound(&emb).r - 0.5).abs() < 1e-12);
        let emb = TorusEmbedding::new(
            base,
            vec![Point::new(0.2, 0.0), Point::new(0.8, 0.0)],
            vec![((0, 1), (1, 0))],
        )
        .unwrap();
        assert!((edge_length_bound(&emb).r - 1.6).abs() < 1e-12);
    }

    #[test]
    fn petersen_window_tiles() {
        let emb = fixtures::petersen_torus();
        let w = build_cover_window(&emb, VertexId(0), 30, DEFAULT_WINDOW_BUDGET).unwrap();
        let tiles = w.tile_counts();
        // Lemma-2 style: exactly |V| vertices per fully materialized tile
        for di in -1..=1 {
            for dj in -1..=1 {
                assert_eq!(tiles.get(&(di, dj)).copied().unwrap_or(0), 10, "tile {di},{dj}");
            }
        }
        assert!(tiles.values().all(|&c| c <= 10));
    }

    #[test]
    fn covering_map_bijection_at_non_fringe() {
        let emb = fixtures::petersen_torus();
        let w = build_cover_window(&emb, VertexId(0), 8, DEFAULT_WINDOW_BUDGET).unwrap();
        for v in w.graph().vertices() {
            if w.is_fringe(v) {
                continue;
            }
            let mut projected: Vec<VertexId> = w
                .graph()
                .closed_neighborhood(v)
                .into_iter()
                .map(|u| w.project(u))
                .collect();
            projected.sort_unstable();
            let expect = emb.base().closed_neighborhood(w.project(v));
            assert_eq!(projected, expect, "at {:?}", w.cover_vertex(v));
            assert_eq!(w.graph().degree(v), emb.base().degree(w.project(v)));
        }
    }

    #[test]
    fn disjoint_copies_cover() {
        // planar base inside one tile, all shifts zero
        let emb = fixtures::one_tile_planar(&fixtures::grid(2, 2), &fixtures::grid_positions(2, 2));
        let w = build_cover_window(&emb, VertexId(0), 10, DEFAULT_WINDOW_BUDGET).unwrap();
        let comps = crate::graph::components(w.graph(), &[]);
        let center_comp = comps
            .iter()
            .find(|c| c.contains(&w.center_id()))
            .unwrap();
        assert_eq!(center_comp.len(), 4);
        // fiber elements pairwise non-adjacent
        for f in emb.base().vertices() {
            let fib = w.fiber(f);
            for (i, &a) in fib.iter().enumerate() {
                for &b in &fib[i + 1..] {
                    assert!(!w.graph().adjacent(a, b));
                }
            }
        }
    }

    #[test]
    fn lift_walk_translate_is_winding_number() {
        let emb = fixtures::c4_ring();
        let w = build_cover_window(&emb, VertexId(0), 12, DEFAULT_WINDOW_BUDGET).unwrap();
        // walking 0,1,2,3,0 rightward once around the ring winds (+1, 0):
        // the {0,3} arc runs from pos(0) into the tile on the left, so the
        // reverse traversal 3 -> 0 carries shift (+1, 0)
        let mut cur = w.center_id();
        for &b in &[1u32, 2, 3, 0] {
            cur = w.lift_step(cur, VertexId(b)).unwrap();
        }
        let end = w.cover_vertex(cur);
        assert_eq!(end.base, VertexId(0));
        assert_eq!(end.translate, (1, 0));
        // stay-in-place lift
        assert_eq!(w.lift_step(cur, VertexId(0)).unwrap(), cur);
    }

    #[test]
    fn petersen_lift_winding_oracle() {
        let emb = fixtures::petersen_torus();
        let w = build_cover_window(&emb, VertexId(0), 20, DEFAULT_WINDOW_BUDGET).unwrap();
        // closed walks: sum of directed shifts must equal translate change
        let walks: Vec<Vec<u32>> = vec![
            vec![0, 1, 2, 3, 0],
            vec![0, 1, 2, 8, 3, 0],
            vec![0, 4, 5, 6, 0],
            vec![0, 1, 5, 9, 3, 0],
        ];
        for walk in walks {
            // only use walks that are actual base walks
            let ok = walk
                .windows(2)
                .all(|p| emb.base().adjacent(VertexId(p[0]), VertexId(p[1])));
            if !ok {
                continue;
            }
            let mut cur = w.center_id();
            let (mut wx, mut wy) = (0i64, 0i64);
            for p in walk.windows(2) {
                let s = emb.directed_shift(VertexId(p[0]), VertexId(p[1]));
                wx += s.sx;
                wy += s.sy;
                cur = w.lift_step(cur, VertexId(p[1])).unwrap();
            }
            assert_eq!(w.cover_vertex(cur).translate, (wx, wy));
        }
    }

    #[test]
    fn c4_ring_growth_is_infinite_path() {
        let emb = fixtures::c4_ring();
        let w = build_cover_window(&emb, VertexId(0), 15, DEFAULT_WINDOW_BUDGET).unwrap();
        let profile = w.growth_profile(15);
        for (r, &size) in profile.iter().enumerate() {
            assert_eq!(size, 2 * r + 1);
        }
    }

    #[test]
    fn growth_bound_petersen() {
        let emb = fixtures::petersen_torus();
        let upper = edge_length_bound(&emb).r;
        let w = build_cover_window(&emb, VertexId(0), 25, DEFAULT_WINDOW_BUDGET).unwrap();
        let profile = w.growth_profile(25);
        let n = emb.base().vertex_count() as f64;
        assert_eq!(profile[0], 1);
        for (r, &size) in profile.iter().enumerate() {
            let bound = (2.0 * r as f64 * upper + 1.0).powi(2) * n;
            assert!((size as f64) <= bound, "r={r}: {size} > {bound}");
        }
    }

    #[test]
    fn window_radius_zero() {
        let emb = fixtures::petersen_torus();
        let w = build_cover_window(&emb, VertexId(3), 0, DEFAULT_WINDOW_BUDGET).unwrap();
        assert_eq!(w.fiber(VertexId(3)), vec![w.center_id()]);
    }

    #[test]
    fn budget_error() {
        let emb = fixtures::petersen_torus();
        assert!(matches!(
            build_cover_window(&emb, VertexId(0), 50, 100),
            Err(CoverError::BudgetExceeded(..))
        ));
    }

    #[test]
    fn tor_format_roundtrip() {
        let emb = fixtures::petersen_torus();
        let text = write_torus_embedding(&emb);
        let emb2 = parse_torus_embedding(&text).unwrap();
        assert_eq!(emb.base(), emb2.base());
        for v in emb.base().vertices() {
            let (p, q) = (emb.position(v), emb2.position(v));
            assert!((p.x - q.x).abs() < 1e-12 && (p.y - q.y).abs() < 1e-12);
        }
        for (u, v) in emb.base().edges() {
            assert_eq!(emb.shift(u, v), emb2.shift(u, v));
        }
    }

    #[test]
    fn window_planarity_check() {
        let emb = fixtures::petersen_torus();
        let w = build_cover_window(&emb, VertexId(0), 12, DEFAULT_WINDOW_BUDGET).unwrap();
        assert!(w.check_geometric_planarity().is_ok());
    }

    #[test]
    fn window_ids_stable_under_enlargement() {
        let emb = fixtures::petersen_torus();
        let small = build_cover_window(&emb, VertexId(0), 6, DEFAULT_WINDOW_BUDGET).unwrap();
        let large = build_cover_window(&emb, VertexId(0), 12, DEFAULT_WINDOW_BUDGET).unwrap();
        for v in small.graph().vertices() {
            assert_eq!(small.cover_vertex(v), large.cover_vertex(v));
        }
    }

    #[test]
    fn translation_equivariance() {
        let emb = fixtures::petersen_torus();
        let w = build_cover_window(&emb, VertexId(0), 14, DEFAULT_WINDOW_BUDGET).unwrap();
        let offset = (1i64, 1i64);
        for v in w.graph().vertices() {
            if w.is_fringe(v) {
                continue;
            }
            let cv = w.cover_vertex(v);
            let shifted = CoverVertex {
                base: cv.base,
                translate: (cv.translate.0 + offset.0, cv.translate.1 + offset.1),
            };
            let Some(sv) = w.id_of(shifted) else { continue };
            if w.is_fringe(sv) {
                continue;
            }
            // adding the offset maps N[v] onto N[shifted]
            let mut image: Vec<CoverVertex> = w
                .graph()
                .closed_neighborhood(v)
                .iter()
                .map(|&u| {
                    let c = w.cover_vertex(u);
                    CoverVertex {
                        base: c.base,
                        translate: (c.translate.0 + offset.0, c.translate.1 + offset.1),
                    }
                })
                .collect();
            image.sort_unstable();
            let mut expect: Vec<CoverVertex> = w
                .graph()
                .closed_neighborhood(sv)
                .iter()
                .map(|&u| w.cover_vertex(u))
                .collect();
            expect.sort_unstable();
            assert_eq!(image, expect);
        }
    }
}
