//! Immutable simple undirected graphs and the complete multipartite family.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// An undirected edge stored with its smaller endpoint first.
pub type Edge = (usize, usize);

/// Orders an endpoint pair so the smaller index comes first.
#[inline]
pub fn canonical_edge(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Length of a shortest cycle, or `Infinite` for forests.
///
/// Also used as a girth requirement; `Finite` values order below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Girth {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(Girth::Infinite),
            other => other
                .parse::<usize>()
                .map(Girth::Finite)
                .map_err(|_| GraphError::InvalidGirth(s.to_string())),
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// The edge list is canonical (each pair `u < v`, sorted lexicographically)
/// and adjacency lists are sorted. Nothing mutates a graph after
/// construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut canon = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            canon.push(canonical_edge(a, b));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unique(n, canon))
    }

    fn from_sorted_unique(n: usize, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adjacency,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        Self::from_sorted_unique(n, edges)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Position of an edge in the canonical edge list.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&canonical_edge(a, b)).ok()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Subgraph on `vertices` with every edge of `self` between them.
    ///
    /// Vertices are reindexed by sorted original index; duplicates in the
    /// input are ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            relabel[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| relabel[a] != usize::MAX && relabel[b] != usize::MAX)
            .map(|&(a, b)| (relabel[a], relabel[b]))
            .collect();
        // relabeling is monotone, so the filtered list stays canonical
        Ok(Self::from_sorted_unique(keep.len(), edges))
    }

    /// Spanning subgraph keeping only `edges`; vertex indices are unchanged.
    pub fn edge_subgraph(&self, edges: &[Edge]) -> Result<Graph, GraphError> {
        for &(a, b) in edges {
            if !self.has_edge(a, b) {
                return Err(GraphError::MissingEdge(a, b));
            }
        }
        Graph::new(self.n, edges.iter().copied())
    }

    /// Shortest cycle length by a breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for source in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[source] = 0;
            parent[source] = usize::MAX;
            queue.clear();
            queue.push_back(source);
            while let Some(v) = queue.pop_front() {
                // no shorter cycle can close beyond this depth
                if 2 * dist[v] + 1 >= best {
                    break;
                }
                for &w in &self.adjacency[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// A proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// Graphviz rendering with vertex labels equal to indices.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v} [label=\"{v}\"];\n"));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Wire form of a graph: `{"n": .., "edges": [[u, v], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub edges: Vec<[usize; 2]>,
    pub n: usize,
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(json: GraphJson) -> Result<Self, Self::Error> {
        Graph::new(json.n, json.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

/// Part sizes `[s1, ..., sm]` of a complete multipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultipartiteSpec(Vec<usize>);

impl MultipartiteSpec {
    pub fn new(part_sizes: Vec<usize>) -> Result<Self, GraphError> {
        if part_sizes.is_empty() {
            return Err(GraphError::EmptySpec);
        }
        if let Some(i) = part_sizes.iter().position(|&s| s == 0) {
            return Err(GraphError::ZeroPart(i));
        }
        Ok(MultipartiteSpec(part_sizes))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn part_count(&self) -> usize {
        self.0.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of cross-part pairs, `sum_{i<j} s_i s_j`.
    pub fn edge_count(&self) -> usize {
        let total = self.vertex_count();
        let squares: usize = self.0.iter().map(|s| s * s).sum();
        (total * total - squares) / 2
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|s| s % 2 == 0)
    }

    /// First offset of each part's consecutive vertex block.
    pub fn offsets(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &s| {
                let start = *acc;
                *acc += s;
                Some(start)
            })
            .collect()
    }
}

impl fmt::Display for MultipartiteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for MultipartiteSpec {
    type Err = GraphError;

    /// Parses comma-separated part sizes such as `2,2,2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| GraphError::InvalidSpec(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MultipartiteSpec::new(parts)
    }
}

/// Disjoint vertex sets covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    parts: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, parts: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut owner = vec![false; n];
        for part in &parts {
            for &v in part {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if owner[v] {
                    return Err(GraphError::OverlappingParts(v));
                }
                owner[v] = true;
            }
        }
        if let Some(v) = owner.iter().position(|&o| !o) {
            return Err(GraphError::UncoveredVertex(v));
        }
        Ok(VertexPartition { parts })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Index of the part containing `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&v))
    }
}

/// `K_{s1,...,sm}` with part `i` on the consecutive block starting at
/// `s1 + ... + s(i-1)`.
pub fn complete_multipartite(spec: &MultipartiteSpec) -> (Graph, VertexPartition) {
    let n = spec.vertex_count();
    let mut part_id = Vec::with_capacity(n);
    let mut parts = Vec::with_capacity(spec.part_count());
    for (i, (&size, start)) in spec.parts().iter().zip(spec.offsets()).enumerate() {
        part_id.extend(std::iter::repeat(i).take(size));
        parts.push((start..start + size).collect());
    }
    let edges = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| part_id[a] != part_id[b])
        .collect();
    let graph = Graph::from_sorted_unique(n, edges);
    let partition = VertexPartition { parts };
    (graph, partition)
}
