//! Partitioning a graph's edges into forests by matroid-union augmentation.
//!
//! Edges are inserted in canonical order. An edge that fits into no forest
//! directly triggers a breadth-first search over exchanges: an edge `f` may
//! move into forest `i` if it joins two components there, or it may displace
//! any edge on the forest-`i` path between its endpoints. A shortest exchange
//! sequence keeps every forest acyclic. When the search is exhausted the
//! edges inserted so far plus the new one cannot be split into `k` forests.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bounds::ceil_div;
use crate::error::ForestError;
use crate::graph::{Edge, Graph};

/// Rooted-forest witness for one class: `parent[v]` is `v`'s parent, `None`
/// at roots. Each class edge is exactly one `(v, parent[v])` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParentArray {
    pub parent: Vec<Option<usize>>,
}

impl ParentArray {
    fn for_class(n: usize, class: &[Edge]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in class {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(v);
                        queue.push_back(w);
                    }
                }
            }
        }
        ParentArray { parent }
    }

    /// True when the parent pointers are acyclic and name exactly `class`.
    pub fn certifies(&self, class: &[Edge]) -> bool {
        let n = self.parent.len();
        // every chain of parents must reach a root within n steps
        for start in 0..n {
            let mut v = start;
            let mut steps = 0;
            while let Some(p) = self.parent[v] {
                if p >= n || steps > n {
                    return false;
                }
                v = p;
                steps += 1;
            }
        }
        let mut from_parents: Vec<Edge> = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| crate::graph::canonical_edge(v, p)))
            .collect();
        from_parents.sort_unstable();
        let mut listed = class.to_vec();
        listed.sort_unstable();
        from_parents == listed
    }
}

/// Edge partition of `base_graph` into forests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestDecomposition {
    pub base_graph: Graph,
    pub classes: Vec<Vec<Edge>>,
    pub certificates: Vec<ParentArray>,
}

impl ForestDecomposition {
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// The class as a spanning subgraph of the base graph.
    pub fn class_graph(&self, i: usize) -> Graph {
        self.base_graph
            .edge_subgraph(&self.classes[i])
            .expect("classes hold base-graph edges")
    }

    pub fn to_json(&self) -> ForestDecompositionJson {
        ForestDecompositionJson {
            k: self.k(),
            classes: self
                .classes
                .iter()
                .map(|c| c.iter().map(|&(a, b)| [a, b]).collect())
                .collect(),
        }
    }
}

/// Wire form: `{"k": .., "classes": [[[u, v], ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestDecompositionJson {
    pub classes: Vec<Vec<[usize; 2]>>,
    pub k: usize,
}

/// Working state: which forest holds each edge, plus per-forest adjacency
/// `(neighbor, edge id)` for path queries.
struct Forests<'g> {
    graph: &'g Graph,
    owner: Vec<Option<usize>>,
    adj: Vec<Vec<Vec<(usize, usize)>>>,
}

impl<'g> Forests<'g> {
    fn new(graph: &'g Graph, k: usize) -> Self {
        Forests {
            graph,
            owner: vec![None; graph.edge_count()],
            adj: vec![vec![Vec::new(); graph.vertex_count()]; k],
        }
    }

    /// Edge ids on the forest-`i` path from `from` to `to`, or `None` if they
    /// lie in different trees.
    fn path(&self, i: usize, from: usize, to: usize) -> Option<Vec<usize>> {
        let n = self.graph.vertex_count();
        let mut via: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = Vec::new();
                let mut cur = to;
                while let Some((prev, e)) = via[cur] {
                    path.push(e);
                    cur = prev;
                }
                return Some(path);
            }
            for &(w, e) in &self.adj[i][v] {
                if !seen[w] {
                    seen[w] = true;
                    via[w] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
        None
    }

    fn detach(&mut self, e: usize) {
        if let Some(i) = self.owner[e].take() {
            let (a, b) = self.graph.edges()[e];
            self.adj[i][a].retain(|&(_, id)| id != e);
            self.adj[i][b].retain(|&(_, id)| id != e);
        }
    }

    fn attach(&mut self, e: usize, i: usize) {
        let (a, b) = self.graph.edges()[e];
        self.adj[i][a].push((b, e));
        self.adj[i][b].push((a, e));
        self.owner[e] = Some(i);
    }

    /// Inserts edge `start`, rearranging other edges if needed. Returns
    /// false, leaving the state untouched, if no exchange sequence exists.
    fn insert(&mut self, start: usize) -> bool {
        let k = self.adj.len();
        let m = self.graph.edge_count();
        // label[f] = (edge that f makes room for, forest f is leaving)
        let mut label: Vec<Option<(usize, usize)>> = vec![None; m];
        let mut visited = vec![false; m];
        visited[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let (a, b) = self.graph.edges()[f];
            for i in 0..k {
                if self.owner[f] == Some(i) {
                    continue;
                }
                match self.path(i, a, b) {
                    None => {
                        self.augment(f, i, &label);
                        return true;
                    }
                    Some(mut cycle) => {
                        cycle.sort_unstable();
                        for g in cycle {
                            if !visited[g] {
                                visited[g] = true;
                                label[g] = Some((f, i));
                                queue.push_back(g);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    /// Moves `last` into forest `target`, then walks the labels back,
    /// moving each predecessor into the forest its successor vacated.
    fn augment(&mut self, last: usize, target: usize, label: &[Option<(usize, usize)>]) {
        let mut edge = last;
        let mut forest = target;
        loop {
            self.detach(edge);
            self.attach(edge, forest);
            match label[edge] {
                Some((prev, vacated)) => {
                    edge = prev;
                    forest = vacated;
                }
                None => break,
            }
        }
    }
}

/// Splits `g`'s edges into exactly `k` forests (some possibly empty), or
/// returns `None` when `k` is below the arboricity.
pub fn decompose_into_forests(
    g: &Graph,
    k: usize,
) -> Result<Option<ForestDecomposition>, ForestError> {
    if k == 0 {
        return Err(ForestError::ZeroForests);
    }
    let mut state = Forests::new(g, k);
    for e in 0..g.edge_count() {
        if !state.insert(e) {
            return Ok(None);
        }
    }
    let mut classes = vec![Vec::new(); k];
    for (e, owner) in state.owner.iter().enumerate() {
        let i = owner.expect("every inserted edge has a forest");
        classes[i].push(g.edges()[e]);
    }
    let certificates = classes
        .iter()
        .map(|c| ParentArray::for_class(g.vertex_count(), c))
        .collect();
    Ok(Some(ForestDecomposition {
        base_graph: g.clone(),
        classes,
        certificates,
    }))
}

/// The least `k` admitting a forest split, with its witness. The search
/// starts at `ceil(|E| / (|V| - 1))`.
pub fn arboricity_with_witness(g: &Graph) -> Result<(usize, ForestDecomposition), ForestError> {
    if g.edge_count() == 0 {
        return Err(ForestError::NoEdges);
    }
    let mut k = ceil_div(g.edge_count(), g.vertex_count() - 1);
    loop {
        if let Some(d) = decompose_into_forests(g, k)? {
            return Ok((k, d));
        }
        k += 1;
    }
}
