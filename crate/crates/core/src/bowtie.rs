//! The doubling product `G ⋈ G` and explicit plane embeddings of the
//! doubled trees and forests.
//!
//! Source vertex `w_i` becomes `u_i = i` and `v_i = n + i`. Every source
//! edge `w_i w_j` yields the four edges `u_i u_j`, `v_i v_j`, `u_i v_j` and
//! `v_i u_j`, so the product has `2n` vertices and `4|E|` edges.

use serde::{Deserialize, Serialize};

use crate::error::EmbeddingError;
use crate::graph::{Edge, Graph};

/// Index convention linking a source graph to its doubled copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BowtieMap {
    pub source_vertex_count: usize,
}

impl BowtieMap {
    pub fn u(&self, i: usize) -> usize {
        i
    }

    pub fn v(&self, i: usize) -> usize {
        self.source_vertex_count + i
    }

    /// Source vertex of a doubled vertex.
    pub fn source(&self, x: usize) -> usize {
        x % self.source_vertex_count
    }

    pub fn is_u_copy(&self, x: usize) -> bool {
        x < self.source_vertex_count
    }
}

pub fn bowtie_product(g: &Graph) -> (Graph, BowtieMap) {
    let map = BowtieMap {
        source_vertex_count: g.vertex_count(),
    };
    let edges = g.edges().iter().flat_map(|&(i, j)| {
        [
            (map.u(i), map.u(j)),
            (map.v(i), map.v(j)),
            (map.u(i), map.v(j)),
            (map.v(i), map.u(j)),
        ]
    });
    let doubled = Graph::new(2 * g.vertex_count(), edges)
        .expect("a simple source graph doubles to a simple graph");
    (doubled, map)
}

/// Cyclic neighbor order at every vertex. In a simple graph a neighbor
/// names its dart uniquely.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub rotations: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    /// Every undirected edge named by the rotations, canonical and sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .rotations
            .iter()
            .enumerate()
            .flat_map(|(v, rot)| rot.iter().filter(move |&&w| v < w).map(move |&w| (v, w)))
            .collect();
        out.sort_unstable();
        out
    }

    fn position(&self, at: usize, neighbor: usize) -> usize {
        self.rotations[at]
            .iter()
            .position(|&w| w == neighbor)
            .expect("neighbor present in rotation")
    }

    fn succ(&self, at: usize, neighbor: usize) -> usize {
        let rot = &self.rotations[at];
        rot[(self.position(at, neighbor) + 1) % rot.len()]
    }

    fn pred(&self, at: usize, neighbor: usize) -> usize {
        let rot = &self.rotations[at];
        rot[(self.position(at, neighbor) + rot.len() - 1) % rot.len()]
    }

    /// Does the face entered by dart `a -> b` continue as the four-cycle
    /// `a -> b -> c -> d -> a`? Faces follow `x -> y` by `y -> succ_y(x)`.
    fn is_quad_face(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        self.succ(b, a) == c && self.succ(c, b) == d && self.succ(d, c) == a && self.succ(a, d) == b
    }
}

/// Inserts the doubled leaf `(u_leaf, v_leaf)` hanging off pair
/// `(u_hub, v_hub)` into a four-face next to the `u_hub - lane - v_hub` path.
///
/// The two new darts at `u_hub` sit beside the dart to `lane`, nearest first
/// `v_leaf` then `u_leaf`; `v_hub` gets the mirror image. A side whose other
/// lane is `partner` (the twin of `lane`) is taken only when no other side
/// qualifies, so each neighbor's two lanes stay adjacent around the hub.
fn insert_leaf_paths(
    rot: &mut RotationSystem,
    hub: (usize, usize),
    lane: usize,
    partner: usize,
    leaf: (usize, usize),
) -> Result<(), EmbeddingError> {
    let (u_hub, v_hub) = hub;
    let (u_leaf, v_leaf) = leaf;
    let after = rot.succ(u_hub, lane);
    let before = rot.pred(u_hub, lane);
    // face u_hub -> after -> v_hub -> lane, entered at u_hub from lane
    let after_ok = rot.is_quad_face(lane, u_hub, after, v_hub);
    // face u_hub -> lane -> v_hub -> before, entered at u_hub from before
    let before_ok = rot.is_quad_face(before, u_hub, lane, v_hub);
    let use_after = match (after_ok, before_ok) {
        (true, true) => after != partner || before == partner,
        (true, false) => true,
        (false, true) => false,
        (false, false) => return Err(EmbeddingError::NoInsertionFace(u_hub, lane, v_hub)),
    };

    let at_u = rot.position(u_hub, lane);
    let at_v = rot.position(v_hub, lane);
    if use_after {
        // u_hub: lane, v_leaf, u_leaf, after; v_hub: after, u_leaf, v_leaf, lane
        rot.rotations[u_hub].splice(at_u + 1..at_u + 1, [v_leaf, u_leaf]);
        rot.rotations[v_hub].splice(at_v..at_v, [u_leaf, v_leaf]);
    } else {
        // u_hub: before, u_leaf, v_leaf, lane; v_hub: lane, v_leaf, u_leaf, before
        rot.rotations[u_hub].splice(at_u..at_u, [u_leaf, v_leaf]);
        rot.rotations[v_hub].splice(at_v + 1..at_v + 1, [v_leaf, u_leaf]);
    }
    rot.rotations[u_leaf] = vec![u_hub, v_hub];
    rot.rotations[v_leaf] = vec![v_hub, u_hub];
    Ok(())
}

/// Plane embedding of `t ⋈ t` for a tree `t` with at least two vertices.
///
/// Leaves are peeled lowest index first down to a single edge, whose
/// product is a four-cycle. Leaves are then restored in reverse; restoring
/// leaf `w` on `w'` adds the paths `u_w' v_w v_w'` and `u_w' u_w v_w'`
/// beside `u_w' v_x v_w'`, where `w_x` is the lowest-indexed neighbor of
/// `w'` present at that moment.
pub fn tree_bowtie_embedding(t: &Graph) -> Result<RotationSystem, EmbeddingError> {
    if t.vertex_count() < 2 {
        return Err(EmbeddingError::TreeTooSmall);
    }
    if !t.is_tree() {
        return Err(EmbeddingError::NotATree);
    }
    let n = t.vertex_count();
    let map = BowtieMap {
        source_vertex_count: n,
    };

    let mut present = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    // (leaf, attachment) in removal order
    let mut peeled = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let leaf = (0..n)
            .find(|&v| present[v] && degree[v] == 1)
            .expect("a tree with three or more vertices has a leaf");
        let hub = t
            .neighbors(leaf)
            .iter()
            .copied()
            .find(|&w| present[w])
            .expect("leaf has one present neighbor");
        present[leaf] = false;
        degree[hub] -= 1;
        peeled.push((leaf, hub));
    }
    let base: Vec<usize> = (0..n).filter(|&v| present[v]).collect();
    let (a, b) = (base[0], base[1]);

    let mut rot = RotationSystem {
        rotations: vec![Vec::new(); 2 * n],
    };
    // four-cycle u_a u_b v_a v_b
    rot.rotations[map.u(a)] = vec![map.u(b), map.v(b)];
    rot.rotations[map.u(b)] = vec![map.v(a), map.u(a)];
    rot.rotations[map.v(a)] = vec![map.v(b), map.u(b)];
    rot.rotations[map.v(b)] = vec![map.u(a), map.v(a)];

    for &(leaf, hub) in peeled.iter().rev() {
        let anchor = t
            .neighbors(hub)
            .iter()
            .copied()
            .find(|&w| present[w])
            .expect("restored hub keeps a neighbor");
        insert_leaf_paths(
            &mut rot,
            (map.u(hub), map.v(hub)),
            map.v(anchor),
            map.u(anchor),
            (map.u(leaf), map.v(leaf)),
        )?;
        present[leaf] = true;
    }
    Ok(rot)
}

/// Plane embedding of `f ⋈ f` for a forest: the disjoint union of the
/// per-component tree embeddings. Isolated source vertices give two
/// isolated doubled vertices with empty rotations.
pub fn forest_bowtie_embedding(f: &Graph) -> Result<RotationSystem, EmbeddingError> {
    if !f.is_forest() {
        return Err(EmbeddingError::NotAForest);
    }
    let n = f.vertex_count();
    let mut rotations = vec![Vec::new(); 2 * n];
    for comp in f.components() {
        if comp.len() < 2 {
            continue;
        }
        let k = comp.len();
        let tree = f.induced_subgraph(&comp).expect("component vertices are in range");
        let local = tree_bowtie_embedding(&tree)?;
        // local u_i = i, v_i = k + i
        let lift = |x: usize| if x < k { comp[x] } else { n + comp[x - k] };
        for (x, rot) in local.rotations.into_iter().enumerate() {
            rotations[lift(x)] = rot.into_iter().map(lift).collect();
        }
    }
    Ok(RotationSystem { rotations })
}
