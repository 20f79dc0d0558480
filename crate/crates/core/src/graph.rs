//! Simple undirected graphs, the edge-list text format and unweighted
//! all-pairs distances.
//!
//! Vertices are dense ids `0..n`. A [`Graph`] is always simple (no loops, no
//! parallel edges) but may be disconnected; connectivity is enforced when a
//! [`DistanceMatrix`] is built, which every index computation requires.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex id.
pub type Vertex = usize;

/// Default upper bound on the number of vertices accepted by constructors.
pub const DEFAULT_MAX_VERTICES: usize = 10_000;

/// Marker used by [`Graph::bfs_distances`] for vertices not reachable from the source.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// `line` is the 1-based input line, or the 1-based edge position for
    /// programmatic construction.
    #[error("self-loop at line {line} (vertex {vertex})")]
    SelfLoop { line: usize, vertex: u64 },
    #[error("duplicate edge {u}-{v} at line {line}")]
    DuplicateEdge { line: usize, u: u64, v: u64 },
    #[error("malformed line {line}: {content:?}")]
    Malformed { line: usize, content: String },
    #[error("vertex {vertex} at line {line} is out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("header declares {declared} edges but {found} are listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("graph has {n} vertices, above the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("graph has no vertices")]
    Empty,
}

/// Undirected edge stored with `s < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    s: Vertex,
    t: Vertex,
}

impl Edge {
    /// Canonical edge between `a` and `b`; `None` for a loop.
    pub fn new(a: Vertex, b: Vertex) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { s: a, t: b }),
            std::cmp::Ordering::Greater => Some(Edge { s: b, t: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    #[inline]
    pub fn s(self) -> Vertex {
        self.s
    }

    #[inline]
    pub fn t(self) -> Vertex {
        self.t
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.s, self.t)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.s == v || self.t == v
    }
}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range ids. Uses [`DEFAULT_MAX_VERTICES`] as the size cap.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_edges_capped(n, edges, DEFAULT_MAX_VERTICES)
    }

    pub fn from_edges_capped<I>(n: usize, edges: I, cap: usize) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n > cap {
            return Err(GraphError::TooLarge { n, cap });
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut list = Vec::new();
        let mut seen = HashSet::new();
        for (idx, (a, b)) in edges.into_iter().enumerate() {
            let line = idx + 1;
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex: x as u64, n });
                }
            }
            let e = Edge::new(a, b).ok_or(GraphError::SelfLoop { line, vertex: a as u64 })?;
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge { line, u: a as u64, v: b as u64 });
            }
            adjacency[e.s].push(e.t);
            adjacency[e.t].push(e.s);
            list.push(e);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }
        list.sort_unstable();
        Ok(Graph { adjacency, edges: list })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbour list of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.vertex_count() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Hop distances from `source`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: Vertex) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Number of connected components (0 for the empty graph).
    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            count += 1;
            seen[root] = true;
            stack.push(root);
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Errors unless the graph is non-empty and connected.
    pub fn ensure_connected(&self) -> Result<(), GraphError> {
        match self.component_count() {
            0 => Err(GraphError::Empty),
            1 => Ok(()),
            components => Err(GraphError::Disconnected { components }),
        }
    }

    /// Two-colourability, checked per component by BFS layering: the graph is
    /// bipartite iff no edge joins two vertices of the same layer.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut layer = vec![UNREACHABLE; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if layer[root] != UNREACHABLE {
                continue;
            }
            layer[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if layer[w] == UNREACHABLE {
                        layer[w] = layer[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        self.edges.iter().all(|e| layer[e.s] != layer[e.t])
    }

    /// Serializes to the edge-list format with a `p <n> <m>` header.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {} {}\n", self.vertex_count(), self.edge_count());
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.s, e.t));
        }
        out
    }
}

/// Result of parsing an edge list: the dense graph plus the original label
/// of every dense vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

/// Parses the edge-list format with the default vertex cap.
///
/// Lines hold two whitespace-separated non-negative integers. Blank lines and
/// lines starting with `#` are ignored. An optional first line `p <n> <m>`
/// fixes the vertex count (ids must then be `< n`) and the edge count.
/// Without a header, the distinct labels are mapped to `0..n` in increasing
/// order. The parser does not require connectivity.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, GraphError> {
    parse_edge_list_capped(text, DEFAULT_MAX_VERTICES)
}

pub fn parse_edge_list_capped(text: &str, cap: usize) -> Result<ParsedGraph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw: Vec<(usize, u64, u64)> = Vec::new();
    let mut first_content = true;

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || GraphError::Malformed { line: line_no, content: trimmed.to_string() };
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens[0] == "p" {
            if !first_content || tokens.len() != 3 {
                return Err(malformed());
            }
            let n: usize = tokens[1].parse().map_err(|_| malformed())?;
            let m: usize = tokens[2].parse().map_err(|_| malformed())?;
            if n > cap {
                return Err(GraphError::TooLarge { n, cap });
            }
            header = Some((n, m));
            first_content = false;
            continue;
        }
        first_content = false;
        if tokens.len() != 2 {
            return Err(malformed());
        }
        let u: u64 = tokens[0].parse().map_err(|_| malformed())?;
        let v: u64 = tokens[1].parse().map_err(|_| malformed())?;
        raw.push((line_no, u, v));
    }

    let (n, labels): (usize, Vec<u64>) = match header {
        Some((n, m)) => {
            if m != raw.len() {
                return Err(GraphError::EdgeCountMismatch { declared: m, found: raw.len() });
            }
            for &(line, u, v) in &raw {
                for x in [u, v] {
                    if x >= n as u64 {
                        return Err(GraphError::VertexOutOfRange { line, vertex: x, n });
                    }
                }
            }
            (n, (0..n as u64).collect())
        }
        None => {
            let mut labels: Vec<u64> = raw.iter().flat_map(|&(_, u, v)| [u, v]).collect();
            labels.sort_unstable();
            labels.dedup();
            if labels.len() > cap {
                return Err(GraphError::TooLarge { n: labels.len(), cap });
            }
            (labels.len(), labels)
        }
    };

    let dense = |label: u64| -> Vertex {
        match header {
            Some(_) => label as Vertex,
            None => labels.binary_search(&label).expect("label collected above"),
        }
    };

    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(raw.len());
    for &(line, u, v) in &raw {
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
        edges.push((dense(u), dense(v)));
    }
    let graph = Graph::from_edges_capped(n, edges, cap)?;
    Ok(ParsedGraph { graph, labels })
}

/// All-pairs hop distances of a connected graph, row-major `n × n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    /// Runs one BFS per source (in parallel). Fails on empty or disconnected input.
    pub fn compute(g: &Graph) -> Result<Self, GraphError> {
        g.ensure_connected()?;
        let n = g.vertex_count();
        let mut data = vec![0u32; n * n];
        data.par_chunks_mut(n).enumerate().for_each(|(source, row)| {
            row.copy_from_slice(&g.bfs_distances(source));
        });
        Ok(DistanceMatrix { n, data })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.data[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// Sum over all ordered pairs.
    pub fn ordered_sum(&self) -> u64 {
        self.data.iter().map(|&d| u64::from(d)).sum()
    }

    pub fn eccentricity(&self, u: Vertex) -> u32 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn parses_minimal_path_and_triangle() {
        let p = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(p.graph.vertex_count(), 3);
        assert_eq!(p.graph.edge_count(), 2);
        assert_eq!(p.labels, vec![0, 1, 2]);

        let c3 = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(c3.graph.edge_count(), 3);
        assert_eq!(c3.graph, cycle(3));
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(
            parse_edge_list("0 0").unwrap_err(),
            GraphError::SelfLoop { line: 1, vertex: 0 }
        );
        assert_eq!(
            parse_edge_list("# c\n0 1\n\n1 0\n").unwrap_err(),
            GraphError::DuplicateEdge { line: 4, u: 1, v: 0 }
        );
        assert!(matches!(
            parse_edge_list("0 1 2").unwrap_err(),
            GraphError::Malformed { line: 1, .. }
        ));
        assert!(matches!(parse_edge_list("0 x").unwrap_err(), GraphError::Malformed { .. }));
        assert!(matches!(parse_edge_list("0 -1").unwrap_err(), GraphError::Malformed { .. }));
        assert_eq!(
            parse_edge_list("p 3 1\n0 3").unwrap_err(),
            GraphError::VertexOutOfRange { line: 2, vertex: 3, n: 3 }
        );
        assert_eq!(
            parse_edge_list("p 3 2\n0 1").unwrap_err(),
            GraphError::EdgeCountMismatch { declared: 2, found: 1 }
        );
        // header only allowed first
        assert!(matches!(
            parse_edge_list("0 1\np 2 1").unwrap_err(),
            GraphError::Malformed { line: 2, .. }
        ));
        assert_eq!(
            parse_edge_list_capped("0 1\n1 2", 2).unwrap_err(),
            GraphError::TooLarge { n: 3, cap: 2 }
        );
    }

    #[test]
    fn parser_remaps_sparse_labels() {
        let p = parse_edge_list("10 30\n30 20\n").unwrap();
        assert_eq!(p.labels, vec![10, 20, 30]);
        assert!(p.graph.has_edge(0, 2));
        assert!(p.graph.has_edge(1, 2));
        assert!(!p.graph.has_edge(0, 1));
    }

    #[test]
    fn parser_accepts_disconnected_but_matrix_rejects() {
        let p = parse_edge_list("p 4 1\n0 1\n").unwrap();
        assert_eq!(p.graph.component_count(), 3);
        assert_eq!(
            DistanceMatrix::compute(&p.graph).unwrap_err(),
            GraphError::Disconnected { components: 3 }
        );
        let empty = parse_edge_list("").unwrap();
        assert_eq!(DistanceMatrix::compute(&empty.graph).unwrap_err(), GraphError::Empty);
    }

    #[test]
    fn single_vertex_header() {
        let p = parse_edge_list("p 1 0\n").unwrap();
        let dm = DistanceMatrix::compute(&p.graph).unwrap();
        assert_eq!(dm.get(0, 0), 0);
    }

    #[test]
    fn bfs_rows() {
        assert_eq!(cycle(5).bfs_distances(0), vec![0, 1, 2, 2, 1]);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.bfs_distances(0), vec![0, 1, 2]);
    }

    #[test]
    fn small_matrices() {
        let dm = DistanceMatrix::compute(&cycle(4)).unwrap();
        assert_eq!(dm.get(0, 2), 2);
        assert_eq!(dm.get(1, 3), 2);
        for i in 0..4 {
            assert_eq!(dm.get(i, (i + 1) % 4), 1);
        }
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let dm = DistanceMatrix::compute(&k4).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(dm.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn bipartiteness() {
        assert!(cycle(4).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(!cycle(3).is_bipartite());
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = cycle(7);
        let back = parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(back.graph, g);
    }
}
