//! Test-only helpers: random graphs and an exhaustive planarity oracle that
//! shares no code with the library's left-right test.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use thickness_core::graph::{Edge, Graph};

/// Random labeled tree: vertex `i` hangs off a random earlier vertex, then
/// labels are shuffled.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let edges = (1..n).map(|i| (labels[i], labels[rng.gen_range(0..i)]));
    Graph::new(n, edges).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Biconnected blocks as edge lists (Hopcroft-Tarjan with an edge stack).
fn blocks(g: &Graph) -> Vec<Vec<Edge>> {
    struct Walk<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<Edge>,
        out: Vec<Vec<Edge>>,
    }
    impl Walk<'_> {
        fn visit(&mut self, v: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[v] = self.time;
            self.low[v] = self.time;
            for &w in self.g.neighbors(v) {
                if Some(w) == parent {
                    continue;
                }
                if self.disc[w] == 0 {
                    self.stack.push((v, w));
                    self.visit(w, Some(v));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.disc[v] {
                        let mut block = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            block.push(e);
                            if e == (v, w) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if self.disc[w] < self.disc[v] {
                    self.stack.push((v, w));
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
        }
    }
    let n = g.vertex_count();
    let mut walk = Walk {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if walk.disc[v] == 0 {
            walk.visit(v, None);
        }
    }
    walk.out
}

/// Relabels a block onto `0..k` and returns it as a graph.
fn block_graph(block: &[Edge]) -> Graph {
    let verts: BTreeSet<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
    let verts: Vec<usize> = verts.into_iter().collect();
    let idx = |v: usize| verts.binary_search(&v).unwrap();
    Graph::new(verts.len(), block.iter().map(|&(a, b)| (idx(a), idx(b)))).unwrap()
}

fn find_cycle(g: &Graph) -> Vec<usize> {
    // DFS until a back edge closes a cycle
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some((v, i)) = stack.pop() {
        if i < g.degree(v) {
            stack.push((v, i + 1));
            let w = g.neighbors(v)[i];
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cycle = vec![v];
                let mut cur = v;
                while cur != w {
                    cur = parent[cur];
                    cycle.push(cur);
                }
                return cycle;
            }
        }
    }
    unreachable!("a block with three or more vertices has a cycle")
}

struct Fragment {
    attachments: BTreeSet<usize>,
    path: Vec<usize>,
}

fn fragments(g: &Graph, placed_v: &[bool], placed_e: &BTreeSet<Edge>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        if placed_v[a] && placed_v[b] && !placed_e.contains(&(a, b)) {
            out.push(Fragment {
                attachments: [a, b].into_iter().collect(),
                path: vec![a, b],
            });
        }
    }
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for start in 0..n {
        if placed_v[start] || seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut attachments = BTreeSet::new();
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if placed_v[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        // path from the first attachment through the component to another
        let first = *attachments.iter().next().expect("block fragments attach");
        let mut prev = vec![usize::MAX; n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &w in g.neighbors(first) {
            if !placed_v[w] && comp.contains(&w) && prev[w] == usize::MAX {
                prev[w] = first;
                queue.push_back(w);
            }
        }
        let mut path = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if placed_v[w] && w != first {
                    let mut p = vec![w, v];
                    let mut cur = v;
                    while prev[cur] != first {
                        cur = prev[cur];
                        p.push(cur);
                    }
                    p.push(first);
                    p.reverse();
                    path = Some(p);
                    break 'bfs;
                }
                if !placed_v[w] && prev[w] == usize::MAX && w != first {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        out.push(Fragment {
            attachments,
            path: path.expect("a block fragment has two attachments"),
        });
    }
    out
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let k = face.len();
    let ia = face.iter().position(|&x| x == a).unwrap();
    let ib = face.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];
    let mut first = Vec::new();
    let mut i = ia;
    loop {
        first.push(face[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % k;
    }
    first.extend(inner.iter().rev());
    let mut second = Vec::new();
    let mut i = ib;
    loop {
        second.push(face[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % k;
    }
    second.extend(inner.iter());
    (first, second)
}

fn embed(g: &Graph, faces: Vec<Vec<usize>>, placed_v: Vec<bool>, placed_e: BTreeSet<Edge>) -> bool {
    if placed_e.len() == g.edge_count() {
        return true;
    }
    let frags = fragments(g, &placed_v, &placed_e);
    let mut choice: Option<(usize, Vec<usize>)> = None;
    for (i, f) in frags.iter().enumerate() {
        let fits: Vec<usize> = (0..faces.len())
            .filter(|&j| f.attachments.iter().all(|a| faces[j].contains(a)))
            .collect();
        if fits.is_empty() {
            return false;
        }
        if choice.as_ref().map_or(true, |(_, c)| fits.len() < c.len()) {
            choice = Some((i, fits));
        }
    }
    let (i, fits) = choice.expect("some fragment remains");
    let path = &frags[i].path;
    // every face that can host the fragment is tried
    for j in fits {
        let (x, y) = split_face(&faces[j], path);
        let mut next_faces = faces.clone();
        next_faces[j] = x;
        next_faces.push(y);
        let mut pv = placed_v.clone();
        let mut pe = placed_e.clone();
        for w in path.windows(2) {
            pv[w[0]] = true;
            pv[w[1]] = true;
            pe.insert(if w[0] < w[1] { (w[0], w[1]) } else { (w[1], w[0]) });
        }
        if embed(g, next_faces, pv, pe) {
            return true;
        }
    }
    false
}

fn block_planar(block: &Graph) -> bool {
    if block.edge_count() <= 1 {
        return true;
    }
    let cycle = find_cycle(block);
    let mut placed_v = vec![false; block.vertex_count()];
    let mut placed_e = BTreeSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        placed_v[a] = true;
        placed_e.insert(if a < b { (a, b) } else { (b, a) });
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    embed(block, vec![cycle, reversed], placed_v, placed_e)
}

/// Exhaustive planarity: a graph is planar iff each biconnected block is,
/// and each block is searched over every face choice for every fragment.
pub fn brute_force_planar(g: &Graph) -> bool {
    blocks(g).iter().all(|b| block_planar(&block_graph(b)))
}
