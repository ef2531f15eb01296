//! Independent checking: planarity testing, embedding validation by face
//! tracing, and auditing of whole decompositions.
//!
//! Nothing here reuses construction code. Every check starts from raw edge
//! lists and rotations.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::bounds::theta4_lower_bound;
use crate::bowtie::RotationSystem;
use crate::decomposer::Decomposition;
use crate::graph::{canonical_edge, complete_multipartite, Edge, Girth, Graph};

// Left-right planarity test (testing phase only, no embedding output).

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn single(e: usize) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

const UNSET: usize = usize::MAX;

struct LrState<'g> {
    graph: &'g Graph,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    // per edge id, oriented (tail, head) once visited
    orient: Vec<Option<(usize, usize)>>,
    outgoing: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    refs: Vec<Option<usize>>,
    lowpt_edge: Vec<Option<usize>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl<'g> LrState<'g> {
    fn new(graph: &'g Graph) -> Self {
        let (n, m) = (graph.vertex_count(), graph.edge_count());
        LrState {
            graph,
            height: vec![UNSET; n],
            parent_edge: vec![None; n],
            orient: vec![None; m],
            outgoing: vec![Vec::new(); n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            refs: vec![None; m],
            lowpt_edge: vec![None; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
        }
    }

    fn head(&self, e: usize) -> usize {
        self.orient[e].expect("edge oriented").1
    }

    fn tail(&self, e: usize) -> usize {
        self.orient[e].expect("edge oriented").0
    }

    fn orientation(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        let graph = self.graph;
        for &w in graph.neighbors(v) {
            let e = graph.edge_index(v, w).expect("neighbor edge exists");
            if self.orient[e].is_some() {
                continue;
            }
            self.orient[e] = Some((v, w));
            self.outgoing[v].push(e);
            self.lowpt[e] = self.height[v];
            self.lowpt2[e] = self.height[v];
            if self.height[w] == UNSET {
                self.parent_edge[w] = Some(e);
                self.height[w] = self.height[v] + 1;
                self.orientation(w);
            } else {
                self.lowpt[e] = self.height[w];
            }
            self.nesting[e] = 2 * self.lowpt[e] + usize::from(self.lowpt2[e] < self.height[v]);
            if let Some(p) = parent {
                if self.lowpt[e] < self.lowpt[p] {
                    self.lowpt2[p] = self.lowpt[p].min(self.lowpt2[e]);
                    self.lowpt[p] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[p] {
                    self.lowpt2[p] = self.lowpt2[p].min(self.lowpt[e]);
                } else {
                    self.lowpt2[p] = self.lowpt2[p].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn conflicting(&self, iv: &Interval, e: usize) -> bool {
        match iv.high {
            Some(h) => self.lowpt[h] > self.lowpt[e],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => UNSET,
        }
    }

    fn set_ref(&mut self, at: Option<usize>, to: Option<usize>) {
        if let Some(e) = at {
            self.refs[e] = to;
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        let outgoing = self.outgoing[v].clone();
        for (idx, &ei) in outgoing.iter().enumerate() {
            let w = self.head(ei);
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval::single(ei),
                });
            }
            if self.lowpt[ei] < self.height[v] {
                let e = parent.expect("a return edge below v implies v is not a root");
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = parent {
            let u = self.tail(e);
            self.trim_back_edges(u);
            if self.lowpt[e] < self.height[u] {
                let top = *self.stack.last().expect("return edges remain on the stack");
                let (hl, hr) = (top.left.high, top.right.high);
                self.refs[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        // merge return edges of ei into p.right
        loop {
            let mut q = self.stack.pop().expect("ei pushed at least one pair");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("nonempty right interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("top exists");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn trim_back_edges(&mut self, u: usize) {
        let target = self.height[u];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) == target {
                self.stack.pop();
            } else {
                break;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.head(h) == u {
                    p.left.high = self.refs[h];
                } else {
                    break;
                }
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.head(h) == u {
                    p.right.high = self.refs[h];
                } else {
                    break;
                }
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refs[r] = p.left.low;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
    }
}

/// Left-right planarity test: DFS orientation with lowpoints, then the
/// constraint-stack testing phase.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n > 2 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    let mut state = LrState::new(g);
    let mut roots = Vec::new();
    for v in 0..n {
        if state.height[v] == UNSET {
            state.height[v] = 0;
            roots.push(v);
            state.orientation(v);
        }
    }
    for v in 0..n {
        let nesting = &state.nesting;
        state.outgoing[v].sort_by_key(|&e| nesting[e]);
    }
    roots.into_iter().all(|r| state.test(r))
}

/// Euler count for one connected component of an embedded graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEuler {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub characteristic: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EmbeddingFault {
    /// Rotations do not list exactly the darts of the graph.
    Malformed(String),
    /// Face tracing succeeded but a component is not a sphere embedding.
    EulerDeficit { component: usize, characteristic: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub components: Vec<ComponentEuler>,
    pub total_faces: usize,
    pub fault: Option<EmbeddingFault>,
}

impl ValidationReport {
    pub fn accepted(&self) -> bool {
        self.fault.is_none()
    }

    fn malformed(msg: String) -> Self {
        ValidationReport {
            components: Vec::new(),
            total_faces: 0,
            fault: Some(EmbeddingFault::Malformed(msg)),
        }
    }
}

/// Traces faces of `rot` with the rule "after dart `x -> y` comes
/// `y -> z`, where `z` follows `x` in the rotation at `y`" and checks
/// `V - E + F = 2` on every component. An isolated vertex counts one face.
pub fn validate_embedding(g: &Graph, rot: &RotationSystem) -> ValidationReport {
    let n = g.vertex_count();
    if rot.rotations.len() != n {
        return ValidationReport::malformed(format!(
            "rotation covers {} vertices, graph has {n}",
            rot.rotations.len()
        ));
    }
    for v in 0..n {
        let mut listed = rot.rotations[v].clone();
        listed.sort_unstable();
        if listed != g.neighbors(v) {
            return ValidationReport::malformed(format!(
                "rotation at {v} lists {:?}, neighbors are {:?}",
                rot.rotations[v],
                g.neighbors(v)
            ));
        }
    }

    // dart (x, y) -> its slot in the rotation at x
    let mut slot: HashMap<Edge, usize> = HashMap::with_capacity(2 * g.edge_count());
    for (x, r) in rot.rotations.iter().enumerate() {
        for (i, &y) in r.iter().enumerate() {
            slot.insert((x, y), i);
        }
    }
    let next = |(x, y): Edge| -> Edge {
        let r = &rot.rotations[y];
        (y, r[(slot[&(y, x)] + 1) % r.len()])
    };

    let components = g.components();
    let mut component_of = vec![0; n];
    for (c, comp) in components.iter().enumerate() {
        for &v in comp {
            component_of[v] = c;
        }
    }
    let mut faces = vec![0usize; components.len()];
    let mut seen: HashSet<Edge> = HashSet::with_capacity(slot.len());
    for &start in slot.keys().collect::<BTreeSet<_>>() {
        if seen.contains(&start) {
            continue;
        }
        faces[component_of[start.0]] += 1;
        let mut dart = start;
        while seen.insert(dart) {
            dart = next(dart);
        }
    }

    let mut report = ValidationReport {
        components: Vec::with_capacity(components.len()),
        total_faces: 0,
        fault: None,
    };
    for (c, comp) in components.iter().enumerate() {
        let edges = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        let f = if edges == 0 { 1 } else { faces[c] };
        let chi = comp.len() as i64 - edges as i64 + f as i64;
        report.total_faces += f;
        report.components.push(ComponentEuler {
            vertices: comp.len(),
            edges,
            faces: f,
            characteristic: chi,
        });
        if chi != 2 && report.fault.is_none() {
            report.fault = Some(EmbeddingFault::EulerDeficit {
                component: c,
                characteristic: chi,
            });
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub checks: Vec<AuditCheck>,
    pub passed: bool,
}

impl AuditReport {
    pub fn check(&self, name: &str) -> Option<&AuditCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn summarize(failures: &[String]) -> String {
    if failures.is_empty() {
        "ok".to_string()
    } else {
        failures.join("; ")
    }
}

/// Audits a decomposition: partition exactness, per-class planarity,
/// per-class girth at least 4, per-class embedding validity, and the class
/// count against the girth-4 lower bound of the target.
pub fn audit_decomposition(d: &Decomposition) -> AuditReport {
    let (target, _) = complete_multipartite(&d.spec);
    let n = target.vertex_count();

    // (a) partition
    let mut partition_failures = Vec::new();
    let mut hits = vec![0usize; target.edge_count()];
    for (i, class) in d.classes.iter().enumerate() {
        for &(a, b) in &class.edges {
            match target.edge_index(a, b) {
                Some(idx) if a != b => hits[idx] += 1,
                _ => partition_failures.push(format!("class {i} has non-edge {a}-{b}")),
            }
        }
    }
    for (idx, &h) in hits.iter().enumerate() {
        let (a, b) = target.edges()[idx];
        match h {
            0 => partition_failures.push(format!("edge {a}-{b} uncovered")),
            1 => {}
            k => partition_failures.push(format!("edge {a}-{b} covered {k} times")),
        }
    }

    let mut planar_failures = Vec::new();
    let mut girth_failures = Vec::new();
    let mut embedding_failures = Vec::new();
    for (i, class) in d.classes.iter().enumerate() {
        let in_range = class.edges.iter().all(|&(a, b)| a < n && b < n && a != b);
        let mut canon: Vec<Edge> = class.edges.iter().map(|&(a, b)| canonical_edge(a, b)).collect();
        canon.sort_unstable();
        canon.dedup();
        if !in_range || canon.len() != class.edges.len() {
            let msg = format!("class {i} is not a simple edge set on {n} vertices");
            planar_failures.push(msg.clone());
            girth_failures.push(msg.clone());
            embedding_failures.push(msg);
            continue;
        }
        let graph = Graph::new(n, canon).expect("checked simple and in range");
        if !is_planar(&graph) {
            planar_failures.push(format!("class {i} is not planar"));
        }
        let girth = graph.girth();
        if girth < Girth::Finite(4) {
            girth_failures.push(format!("class {i} has girth {girth}"));
        }
        let report = validate_embedding(&graph, &class.rotation);
        if let Some(fault) = report.fault {
            embedding_failures.push(format!("class {i}: {fault:?}"));
        }
    }

    let mut count_failures = Vec::new();
    if d.claimed_count != d.classes.len() {
        count_failures.push(format!(
            "claimed {} classes, file has {}",
            d.claimed_count,
            d.classes.len()
        ));
    }
    let lower = theta4_lower_bound(&target);
    if d.claimed_count != lower {
        count_failures.push(format!(
            "claimed {} classes, lower bound is {lower}",
            d.claimed_count
        ));
    }

    let checks: Vec<AuditCheck> = [
        ("partition", partition_failures),
        ("planarity", planar_failures),
        ("girth", girth_failures),
        ("embedding", embedding_failures),
        ("count", count_failures),
    ]
    .into_iter()
    .map(|(name, failures)| AuditCheck {
        name: name.to_string(),
        passed: failures.is_empty(),
        detail: summarize(&failures),
    })
    .collect();
    let passed = checks.iter().all(|c| c.passed);
    AuditReport { checks, passed }
}
