//! Finite simple undirected graphs with deterministic BFS, balls, shortest
//! paths and component decomposition.
//!
//! All tie-breaking is by smallest vertex id so that every query is an exact
//! function of its inputs.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Dense vertex index into an owning [`Graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    InvalidVertex(u32, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(u32, u32),
    #[error("no path between {0} and {1}")]
    Disconnected(u32, u32),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Finite simple undirected graph. Adjacency lists are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Build a graph from an edge list over `n` vertices.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n {
                return Err(GraphError::InvalidVertex(u, n));
            }
            if v as usize >= n {
                return Err(GraphError::InvalidVertex(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adjacency[u as usize].contains(&VertexId(v)) {
                return Err(GraphError::ParallelEdge(u, v));
            }
            adjacency[u as usize].push(VertexId(v));
            adjacency[v as usize].push(VertexId(u));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.adjacency.len() as u32).map(VertexId)
    }

    /// Edges as (u, v) pairs with u < v, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if (u as u32) < v.0 {
                    out.push((VertexId(u as u32), v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v.idx()]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.idx()].len()
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u.idx()].binary_search(&v).is_ok()
    }

    /// Closed neighborhood N[v], sorted ascending.
    pub fn closed_neighborhood(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = self.adjacency[v.idx()].clone();
        let pos = out.partition_point(|&w| w < v);
        out.insert(pos, v);
        out
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        v.idx() < self.adjacency.len()
    }
}

/// Marker value for unreachable vertices in a [`DistanceMap`].
pub const UNREACHABLE: u32 = u32::MAX;

/// BFS distances plus a deterministic shortest-path tree.
///
/// Among all neighbors at distance `dist(v) - 1`, the parent of `v` is the one
/// with the smallest id.
#[derive(Debug, Clone)]
pub struct DistanceMap {
    pub source: VertexId,
    dist: Vec<u32>,
    parent: Vec<Option<VertexId>>,
}

impl DistanceMap {
    #[inline]
    pub fn dist(&self, v: VertexId) -> Option<u32> {
        let d = self.dist[v.idx()];
        (d != UNREACHABLE).then_some(d)
    }

    #[inline]
    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v.idx()]
    }

    #[inline]
    pub fn reachable(&self, v: VertexId) -> bool {
        self.dist[v.idx()] != UNREACHABLE
    }

    pub fn raw_dist(&self) -> &[u32] {
        &self.dist
    }

    /// Eccentricity within the reachable set.
    pub fn max_dist(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

/// Simple path: consecutive vertices adjacent, no repeats. May be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<VertexId>,
}

impl Path {
    pub fn empty() -> Path {
        Path { vertices: Vec::new() }
    }

    pub fn single(v: VertexId) -> Path {
        Path { vertices: vec![v] }
    }

    /// Validates adjacency and no-repeat before accepting the sequence.
    pub fn new(graph: &Graph, vertices: Vec<VertexId>) -> Result<Path, GraphError> {
        for w in vertices.windows(2) {
            if !graph.adjacent(w[0], w[1]) {
                return Err(GraphError::Disconnected(w[0].0, w[1].0));
            }
        }
        let mut seen = vertices.clone();
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::ParallelEdge(w[0].0, w[1].0));
            }
        }
        Ok(Path { vertices })
    }

    #[inline]
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn len_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges; 0 for empty and single-vertex paths.
    pub fn len_edges(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn first(&self) -> Option<VertexId> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<VertexId> {
        self.vertices.last().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }
}

/// Deterministic BFS from `root`.
///
/// Parents are chosen as the smallest-id neighbor one level closer to the
/// root, so the output depends only on (graph, root).
pub fn bfs(graph: &Graph, root: VertexId) -> DistanceMap {
    let n = graph.vertex_count();
    let mut dist = vec![UNREACHABLE; n];
    let mut queue = std::collections::VecDeque::new();
    dist[root.idx()] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        let du = dist[u.idx()];
        for &v in graph.neighbors(u) {
            if dist[v.idx()] == UNREACHABLE {
                dist[v.idx()] = du + 1;
                queue.push_back(v);
            }
        }
    }
    let mut parent = vec![None; n];
    for v in graph.vertices() {
        let dv = dist[v.idx()];
        if dv == UNREACHABLE || dv == 0 {
            continue;
        }
        // neighbor lists are sorted, so the first match is the smallest id
        parent[v.idx()] = graph
            .neighbors(v)
            .iter()
            .copied()
            .find(|&u| dist[u.idx()] == dv - 1);
    }
    DistanceMap {
        source: root,
        dist,
        parent,
    }
}

/// B_center(radius) = { w : d(center, w) <= radius }, sorted ascending.
pub fn ball(graph: &Graph, center: VertexId, radius: u32) -> Vec<VertexId> {
    let dm = bfs(graph, center);
    graph
        .vertices()
        .filter(|&v| dm.dist(v).is_some_and(|d| d <= radius))
        .collect()
}

/// Connected components of the subgraph induced by V \ removed.
///
/// Components are ordered by their smallest contained vertex id; each
/// component is sorted ascending.
pub fn components(graph: &Graph, removed: &[VertexId]) -> Vec<Vec<VertexId>> {
    let n = graph.vertex_count();
    let mut gone = vec![false; n];
    for &v in removed {
        gone[v.idx()] = true;
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in graph.vertices() {
        if gone[s.idx()] || seen[s.idx()] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![s];
        seen[s.idx()] = true;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &v in graph.neighbors(u) {
                if !gone[v.idx()] && !seen[v.idx()] {
                    seen[v.idx()] = true;
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Shortest u-v path read off the deterministic BFS tree rooted at `u`.
pub fn shortest_path(graph: &Graph, u: VertexId, v: VertexId) -> Result<Path, GraphError> {
    let dm = bfs(graph, u);
    if !dm.reachable(v) {
        return Err(GraphError::Disconnected(u.0, v.0));
    }
    let mut vertices = vec![v];
    let mut cur = v;
    while let Some(p) = dm.parent(cur) {
        vertices.push(p);
        cur = p;
    }
    vertices.reverse();
    Ok(Path { vertices })
}

/// Edge-list text format: first line `n m`, then `m` lines `u v` (0-based).
/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| GraphError::Parse { line: 0, msg: "empty file".into() })?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::Parse { line: line_no, msg: "expected `n m`".into() })?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::Parse { line: line_no, msg: "expected `n m`".into() })?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, l) in lines {
        let mut it = l.split_whitespace();
        let u: u32 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse { line: line_no, msg: "expected `u v`".into() })?;
        let v: u32 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse { line: line_no, msg: "expected `u v`".into() })?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: 0,
            msg: format!("header announced {} edges, found {}", m, edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

/// Inverse of [`parse_edge_list`].
pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> Graph {
        let edges: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n as u32 - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        crate::fixtures::petersen()
    }

    #[test]
    fn bfs_on_path() {
        let g = path_graph(3);
        let dm = bfs(&g, VertexId(0));
        assert_eq!(dm.raw_dist(), &[0, 1, 2]);
        assert_eq!(dm.parent(VertexId(2)), Some(VertexId(1)));
    }

    #[test]
    fn bfs_on_c5() {
        let g = cycle(5);
        let dm = bfs(&g, VertexId(0));
        assert_eq!(dm.raw_dist(), &[0, 1, 2, 2, 1]);
    }

    #[test]
    fn bfs_petersen_layers() {
        let g = petersen();
        for root in g.vertices() {
            let dm = bfs(&g, root);
            let at1 = g.vertices().filter(|&v| dm.dist(v) == Some(1)).count();
            let at2 = g.vertices().filter(|&v| dm.dist(v) == Some(2)).count();
            assert_eq!((at1, at2), (3, 6));
        }
    }

    #[test]
    fn ball_examples() {
        let g = petersen();
        let v = VertexId(0);
        assert_eq!(ball(&g, v, 0), vec![v]);
        assert_eq!(ball(&g, v, 1), g.closed_neighborhood(v));
        assert_eq!(ball(&g, v, 2).len(), 10);
    }

    #[test]
    fn components_examples() {
        let g = path_graph(3);
        assert_eq!(
            components(&g, &[VertexId(1)]),
            vec![vec![VertexId(0)], vec![VertexId(2)]]
        );
        let c5 = cycle(5);
        let comps = components(&c5, &[VertexId(0)]);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 4);
    }

    #[test]
    fn components_petersen_minus_closed_neighborhood() {
        let g = petersen();
        for v in g.vertices() {
            let comps = components(&g, &g.closed_neighborhood(v));
            assert_eq!(comps.len(), 1);
            assert_eq!(comps[0].len(), 6);
        }
    }

    #[test]
    fn shortest_path_examples() {
        let g = cycle(4);
        let p = shortest_path(&g, VertexId(0), VertexId(0)).unwrap();
        assert_eq!(p.vertices(), &[VertexId(0)]);
        let p = shortest_path(&g, VertexId(0), VertexId(2)).unwrap();
        assert_eq!(p.vertices(), &[VertexId(0), VertexId(1), VertexId(2)]);
    }

    #[test]
    fn shortest_path_grid_staircase() {
        // 3x3 grid, vertex (r, c) = 3r + c; corner 0 to corner 8.
        let g = crate::fixtures::grid(3, 3);
        let p = shortest_path(&g, VertexId(0), VertexId(8)).unwrap();
        assert_eq!(p.len_edges(), 4);
        // Oracle: enumerate all shortest 0-8 paths, take the lexicographically
        // smallest parent chain (which is what smallest-id parents produce).
        let all = enumerate_shortest_paths(&g, VertexId(0), VertexId(8));
        let expect = all
            .into_iter()
            .min_by(|a, b| {
                let ra: Vec<_> = a.iter().rev().collect();
                let rb: Vec<_> = b.iter().rev().collect();
                ra.cmp(&rb)
            })
            .unwrap();
        assert_eq!(p.vertices(), &expect[..]);
    }

    fn enumerate_shortest_paths(g: &Graph, u: VertexId, v: VertexId) -> Vec<Vec<VertexId>> {
        let dm = bfs(g, u);
        let mut out = Vec::new();
        let mut stack = vec![vec![v]];
        while let Some(path) = stack.pop() {
            let head = *path.last().unwrap();
            if head == u {
                let mut p = path.clone();
                p.reverse();
                out.push(p);
                continue;
            }
            let dh = dm.dist(head).unwrap();
            for &w in g.neighbors(head) {
                if dm.dist(w) == Some(dh - 1) {
                    let mut p = path.clone();
                    p.push(w);
                    stack.push(p);
                }
            }
        }
        out
    }

    #[test]
    fn parse_roundtrip() {
        let text = "# comment\n3 2\n0 1\n1 2 # trailing\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        let g2 = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(parse_edge_list("2 1\n0 5\n").is_err());
    }
}

/// Named-vertex dictionary used by parsers that accept symbolic names.
/// Names map to dense indices in file order.
#[derive(Debug, Default, Clone)]
pub struct NameTable {
    names: BTreeMap<String, VertexId>,
}

impl NameTable {
    pub fn intern(&mut self, name: &str) -> VertexId {
        let next = VertexId(self.names.len() as u32);
        *self.names.entry(name.to_owned()).or_insert(next)
    }

    pub fn get(&self, name: &str) -> Option<VertexId> {
        self.names.get(name).copied()
    }
}
