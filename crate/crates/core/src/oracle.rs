//! Exhaustive girth-thickness for tiny graphs.
//!
//! Edges are assigned in canonical order to an existing class or to the
//! next unused one (a restricted-growth string, so class relabelings are
//! never revisited). A branch dies as soon as a class gains a cycle shorter
//! than the girth requirement or exceeds the planar edge bound for the
//! vertices it touches. Classes with nine or more edges are tested for
//! planarity on every insertion, and every class is re-tested once all
//! edges are placed.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bounds::planar_girth_edge_bound;
use crate::error::OracleError;
use crate::graph::{Edge, Girth, Graph};
use crate::verify::is_planar;

pub const ORACLE_MAX_EDGES: usize = 20;

// smallest non-planar graphs (K_{3,3}, K_5) have nine or more edges
const PLANARITY_CHECK_FROM: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleOutcome {
    Found { count: usize, witness: Vec<Vec<Edge>> },
    Exceeded,
}

impl OracleOutcome {
    pub fn count(&self) -> Option<usize> {
        match self {
            OracleOutcome::Found { count, .. } => Some(*count),
            OracleOutcome::Exceeded => None,
        }
    }
}

struct Class {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    touched: usize,
}

impl Class {
    fn new(n: usize) -> Self {
        Class {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            touched: 0,
        }
    }

    fn push(&mut self, (a, b): Edge) {
        self.touched += usize::from(self.adj[a].is_empty()) + usize::from(self.adj[b].is_empty());
        self.adj[a].push(b);
        self.adj[b].push(a);
        self.edges.push((a, b));
    }

    fn pop(&mut self) {
        let (a, b) = self.edges.pop().expect("pop after push");
        self.adj[a].pop();
        self.adj[b].pop();
        self.touched -= usize::from(self.adj[a].is_empty()) + usize::from(self.adj[b].is_empty());
    }

    /// Would `a - b` close a cycle shorter than `girth`?
    fn closes_short_cycle(&self, (a, b): Edge, girth: Girth) -> bool {
        match girth {
            Girth::Finite(3) => false,
            // triangles through the new edge only
            Girth::Finite(4) => self.adj[a].iter().any(|x| self.adj[b].contains(x)),
            Girth::Finite(g) => self.distance_within(a, b, g - 2),
            Girth::Infinite => self.distance_within(a, b, usize::MAX),
        }
    }

    fn distance_within(&self, from: usize, to: usize, limit: usize) -> bool {
        let mut dist = vec![usize::MAX; self.adj.len()];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                return true;
            }
            if dist[v] >= limit {
                continue;
            }
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    fn as_graph(&self) -> Graph {
        Graph::new(self.adj.len(), self.edges.iter().copied()).expect("class edges are simple")
    }
}

struct Search<'g> {
    edges: &'g [Edge],
    girth: Girth,
    limit: usize,
    classes: Vec<Class>,
    used: usize,
}

impl Search<'_> {
    fn assign(&mut self, idx: usize) -> bool {
        if idx == self.edges.len() {
            return self.classes[..self.used].iter().all(|c| is_planar(&c.as_graph()));
        }
        let edge = self.edges[idx];
        let open = (self.used + 1).min(self.limit);
        for c in 0..open {
            let fresh = c == self.used;
            if self.classes[c].closes_short_cycle(edge, self.girth) {
                continue;
            }
            self.classes[c].push(edge);
            let class = &self.classes[c];
            let cap = planar_girth_edge_bound(class.touched, self.girth).expect("girth checked");
            let ok = class.edges.len() <= cap
                && (class.edges.len() < PLANARITY_CHECK_FROM || is_planar(&class.as_graph()));
            if ok {
                if fresh {
                    self.used += 1;
                }
                if self.assign(idx + 1) {
                    return true;
                }
                if fresh {
                    self.used -= 1;
                }
            }
            self.classes[c].pop();
        }
        false
    }
}

/// Smallest number of classes, at most `max_classes`, into which `g`'s edges
/// split so that every class is planar with girth at least `girth`.
pub fn exact_girth_thickness(
    g: &Graph,
    girth: Girth,
    max_classes: usize,
) -> Result<OracleOutcome, OracleError> {
    if g.edge_count() > ORACLE_MAX_EDGES {
        return Err(OracleError::TooManyEdges {
            edges: g.edge_count(),
            cap: ORACLE_MAX_EDGES,
        });
    }
    planar_girth_edge_bound(1, girth)?;
    if g.edge_count() == 0 {
        return Ok(OracleOutcome::Found {
            count: 0,
            witness: Vec::new(),
        });
    }
    for k in 1..=max_classes {
        let mut search = Search {
            edges: g.edges(),
            girth,
            limit: k,
            classes: (0..k).map(|_| Class::new(g.vertex_count())).collect(),
            used: 0,
        };
        if search.assign(0) {
            let witness = search
                .classes
                .into_iter()
                .map(|c| {
                    let mut e = c.edges;
                    e.sort_unstable();
                    e
                })
                .collect();
            return Ok(OracleOutcome::Found { count: k, witness });
        }
    }
    Ok(OracleOutcome::Exceeded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::theta4_lower_bound;
    use crate::error::BoundsError;
    use crate::graph::{complete_multipartite, MultipartiteSpec};

    fn found(g: &Graph, girth: usize) -> usize {
        exact_girth_thickness(g, Girth::Finite(girth), 6).unwrap().count().unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(found(&Graph::cycle(4), 4), 1);
        assert_eq!(found(&Graph::complete(4), 4), 2);
        let (k222, _) = complete_multipartite(&MultipartiteSpec::new(vec![2, 2, 2]).unwrap());
        assert_eq!(found(&k222, 4), 2);
        assert_eq!(found(&k222, 3), 1);
        assert_eq!(found(&Graph::complete(5), 3), 2);
        assert_eq!(found(&Graph::empty(3), 4), 0);
    }

    #[test]
    fn witness_is_a_valid_partition() {
        let g = Graph::complete(5);
        let OracleOutcome::Found { count, witness } = exact_girth_thickness(&g, Girth::Finite(4), 5).unwrap() else {
            panic!("K_5 splits into few triangle-free classes");
        };
        assert_eq!(witness.len(), count);
        let mut all: Vec<Edge> = witness.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, g.edges());
        for class in &witness {
            let cg = Graph::new(5, class.iter().copied()).unwrap();
            assert!(cg.girth() >= Girth::Finite(4));
            assert!(is_planar(&cg));
        }
    }

    #[test]
    fn arboricity_via_infinite_girth() {
        let out = exact_girth_thickness(&Graph::complete(5), Girth::Infinite, 5).unwrap();
        assert_eq!(out.count(), Some(3));
    }

    #[test]
    fn exceeded_when_cap_too_small() {
        assert_eq!(
            exact_girth_thickness(&Graph::complete(4), Girth::Finite(4), 1).unwrap(),
            OracleOutcome::Exceeded
        );
    }

    #[test]
    fn rejects_large_or_invalid_requests() {
        assert!(matches!(
            exact_girth_thickness(&Graph::complete(7), Girth::Finite(4), 3),
            Err(OracleError::TooManyEdges { edges: 21, cap: 20 })
        ));
        assert_eq!(
            exact_girth_thickness(&Graph::cycle(4), Girth::Finite(2), 3),
            Err(OracleError::Bounds(BoundsError::GirthTooSmall(2)))
        );
    }

    #[test]
    fn relaxing_girth_never_increases_count() {
        let graphs = [
            Graph::complete(5),
            Graph::complete(6),
            Graph::cycle(5),
            complete_multipartite(&MultipartiteSpec::new(vec![1, 2, 3]).unwrap()).0,
        ];
        for g in &graphs {
            let four = found(g, 4);
            assert!(found(g, 3) <= four);
            assert!(four >= theta4_lower_bound(g));
        }
    }
}
