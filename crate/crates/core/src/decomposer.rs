//! Minimum decomposition of `K_{2n1,...,2nm}` into planar subgraphs of
//! girth at least four.
//!
//! The halved graph `K_{n1,...,nm}` is split into `ceil(e/(n-1))` forests;
//! each forest is doubled and embedded, and the doubled vertices are laid
//! into the target so that target part `p` is `U_p ∪ V_p`.

use serde::{Deserialize, Serialize};

use crate::bounds::multipartite_arboricity;
use crate::bowtie::{bowtie_product, forest_bowtie_embedding, RotationSystem};
use crate::error::{DecomposeError, GraphError};
use crate::forests::decompose_into_forests;
use crate::graph::{canonical_edge, complete_multipartite, Edge, Graph, MultipartiteSpec, VertexPartition};

/// One planar class: its edges plus the embedding shipped as a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionClass {
    pub edges: Vec<Edge>,
    pub rotation: RotationSystem,
}

/// Edge partition of the target graph with per-class embeddings.
///
/// Classes loaded from a file are kept verbatim so that an audit can see
/// malformed content; nothing here is trusted by the verifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub spec: MultipartiteSpec,
    pub target_graph: Graph,
    pub target_partition: VertexPartition,
    pub classes: Vec<DecompositionClass>,
    pub claimed_count: usize,
}

/// Wire form:
/// `{"spec": [..], "count": k, "classes": [{"edges": [[u, v], ..], "rotations": [..]}, ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionJson {
    pub classes: Vec<ClassJson>,
    pub count: usize,
    pub spec: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassJson {
    pub edges: Vec<[usize; 2]>,
    pub rotations: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            spec: self.spec.parts().to_vec(),
            count: self.claimed_count,
            classes: self
                .classes
                .iter()
                .map(|c| ClassJson {
                    edges: c.edges.iter().map(|&(a, b)| [a, b]).collect(),
                    rotations: c.rotation.rotations.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds the target from `spec`; class contents are taken as-is.
    pub fn from_json(json: DecompositionJson) -> Result<Self, GraphError> {
        let spec = MultipartiteSpec::new(json.spec)?;
        let (target_graph, target_partition) = complete_multipartite(&spec);
        let classes = json
            .classes
            .into_iter()
            .map(|c| DecompositionClass {
                edges: c.edges.into_iter().map(|[a, b]| (a, b)).collect(),
                rotation: RotationSystem {
                    rotations: c.rotations,
                },
            })
            .collect();
        Ok(Decomposition {
            spec,
            target_graph,
            target_partition,
            classes,
            claimed_count: json.count,
        })
    }

    /// Graphviz rendering with one edge color per class.
    pub fn to_dot(&self) -> String {
        const PALETTE: [&str; 8] = [
            "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
        ];
        let mut out = String::from("graph G {\n");
        for (p, part) in self.target_partition.parts().iter().enumerate() {
            for &v in part {
                out.push_str(&format!("  {v} [label=\"{v}\", group={p}];\n"));
            }
        }
        for (i, class) in self.classes.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            for &(a, b) in &class.edges {
                out.push_str(&format!("  {a} -- {b} [color=\"{color}\", class={i}];\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

fn halve(spec: &MultipartiteSpec) -> Result<MultipartiteSpec, DecomposeError> {
    if let Some((index, &size)) = spec.parts().iter().enumerate().find(|(_, &s)| s % 2 == 1) {
        return Err(DecomposeError::OddPart { index, size });
    }
    let halved = MultipartiteSpec::new(spec.parts().iter().map(|s| s / 2).collect())?;
    if halved.vertex_count() < 2 {
        return Err(DecomposeError::TooSmall);
    }
    Ok(halved)
}

/// Optimal class count `ceil(e/(n-1))` computed on the halved spec.
pub fn theta4_formula(spec: &MultipartiteSpec) -> Result<usize, DecomposeError> {
    let halved = halve(spec)?;
    Ok(multipartite_arboricity(&halved).expect("halved spec has two or more vertices"))
}

/// Where each vertex of `K_half ⋈ K_half` lands in `K_{2n1,...,2nm}`.
///
/// Source vertex of rank `r` in part `p` maps to `offset_p + r` (its u-copy)
/// and `offset_p + n_p + r` (its v-copy), where `offset_p` is the start of
/// target part `p`.
pub fn bowtie_to_target(halved: &MultipartiteSpec) -> Vec<usize> {
    let n = halved.vertex_count();
    let mut to = vec![0; 2 * n];
    let mut source = 0;
    let mut target_offset = 0;
    for &size in halved.parts() {
        for rank in 0..size {
            to[source] = target_offset + rank;
            to[n + source] = target_offset + size + rank;
            source += 1;
        }
        target_offset += 2 * size;
    }
    to
}

pub fn decompose_even_multipartite(spec: &MultipartiteSpec) -> Result<Decomposition, DecomposeError> {
    let halved = halve(spec)?;
    let (source, _) = complete_multipartite(&halved);
    let (target_graph, target_partition) = complete_multipartite(spec);
    let relabel = bowtie_to_target(&halved);

    if source.edge_count() == 0 {
        return Ok(Decomposition {
            spec: spec.clone(),
            target_graph,
            target_partition,
            classes: Vec::new(),
            claimed_count: 0,
        });
    }

    let k = multipartite_arboricity(&halved).expect("halved spec has two or more vertices");
    let forests = decompose_into_forests(&source, k)
        .expect("k is positive")
        .ok_or(DecomposeError::ForestSplitFailed(k))?;

    let mut classes = Vec::with_capacity(k);
    for i in 0..k {
        let forest = forests.class_graph(i);
        let embedding = forest_bowtie_embedding(&forest)?;
        let (doubled, _) = bowtie_product(&forest);
        let mut edges: Vec<Edge> = doubled
            .edges()
            .iter()
            .map(|&(a, b)| canonical_edge(relabel[a], relabel[b]))
            .collect();
        edges.sort_unstable();
        let mut rotations = vec![Vec::new(); relabel.len()];
        for (x, rot) in embedding.rotations.into_iter().enumerate() {
            rotations[relabel[x]] = rot.into_iter().map(|y| relabel[y]).collect();
        }
        classes.push(DecompositionClass {
            edges,
            rotation: RotationSystem { rotations },
        });
    }

    Ok(Decomposition {
        spec: spec.clone(),
        target_graph,
        target_partition,
        classes,
        claimed_count: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(parts: &[usize]) -> MultipartiteSpec {
        MultipartiteSpec::new(parts.to_vec()).unwrap()
    }

    fn union_of_classes(d: &Decomposition) -> Vec<Edge> {
        let mut all: Vec<Edge> = d.classes.iter().flat_map(|c| c.edges.iter().copied()).collect();
        all.sort_unstable();
        all
    }

    #[test]
    fn formula_examples() {
        assert_eq!(theta4_formula(&spec(&[2, 2])), Ok(1));
        assert_eq!(theta4_formula(&spec(&[6, 6])), Ok(2));
        assert_eq!(theta4_formula(&spec(&[2, 2, 2, 2])), Ok(2));
        assert_eq!(
            theta4_formula(&spec(&[2, 3])),
            Err(DecomposeError::OddPart { index: 1, size: 3 })
        );
    }

    #[test]
    fn smallest_instance_is_the_four_cycle() {
        let d = decompose_even_multipartite(&spec(&[2, 2])).unwrap();
        assert_eq!(d.claimed_count, 1);
        assert_eq!(d.classes.len(), 1);
        assert_eq!(d.classes[0].edges, d.target_graph.edges());
        assert_eq!(d.target_graph.edge_count(), 4);
    }

    #[test]
    fn k222_uses_two_classes() {
        let d = decompose_even_multipartite(&spec(&[2, 2, 2])).unwrap();
        assert_eq!(d.claimed_count, 2);
        assert_eq!(union_of_classes(&d), d.target_graph.edges());
        assert_eq!(union_of_classes(&d).len(), 12);
        // K_3 splits as a two-edge path plus one edge
        let mut sizes: Vec<usize> = d.classes.iter().map(|c| c.edges.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 8]);
    }

    #[test]
    fn k44_uses_two_classes() {
        let d = decompose_even_multipartite(&spec(&[4, 4])).unwrap();
        assert_eq!(d.claimed_count, 2);
        assert_eq!(union_of_classes(&d), d.target_graph.edges());
        assert_eq!(d.target_graph.edge_count(), 16);
    }

    #[test]
    fn rejects_out_of_scope_specs() {
        assert_eq!(
            decompose_even_multipartite(&spec(&[3, 3])).unwrap_err(),
            DecomposeError::OddPart { index: 0, size: 3 }
        );
        assert_eq!(
            decompose_even_multipartite(&spec(&[2])).unwrap_err(),
            DecomposeError::TooSmall
        );
    }

    #[test]
    fn single_part_gives_an_empty_decomposition() {
        let d = decompose_even_multipartite(&spec(&[4])).unwrap();
        assert_eq!(d.claimed_count, 0);
        assert!(d.classes.is_empty());
        assert_eq!(d.target_graph.edge_count(), 0);
    }

    #[test]
    fn relabeled_product_is_the_target() {
        for parts in [vec![1, 1], vec![1, 2, 3], vec![2, 2, 2], vec![3, 1, 2, 2]] {
            let halved = spec(&parts);
            let doubled_parts: Vec<usize> = parts.iter().map(|p| 2 * p).collect();
            let (source, _) = complete_multipartite(&halved);
            let (product, _) = bowtie_product(&source);
            let to = bowtie_to_target(&halved);
            let relabeled = Graph::new(
                product.vertex_count(),
                product.edges().iter().map(|&(a, b)| (to[a], to[b])),
            )
            .unwrap();
            let (target, partition) = complete_multipartite(&spec(&doubled_parts));
            assert_eq!(relabeled, target, "{parts:?}");
            // target part p is exactly the u- and v-copies of source part p
            let n = halved.vertex_count();
            for (p, block) in halved.offsets().into_iter().enumerate() {
                let mut copies: Vec<usize> = (block..block + parts[p])
                    .flat_map(|i| [to[i], to[n + i]])
                    .collect();
                copies.sort_unstable();
                assert_eq!(copies, partition.parts()[p]);
            }
        }
    }

    #[test]
    fn json_round_trip_preserves_content() {
        let d = decompose_even_multipartite(&spec(&[2, 4])).unwrap();
        let back = Decomposition::from_json(d.to_json()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn dot_colors_each_class() {
        let d = decompose_even_multipartite(&spec(&[2, 2, 2])).unwrap();
        let dot = d.to_dot();
        assert!(dot.contains("class=0") && dot.contains("class=1"));
        assert_eq!(dot.matches(" -- ").count(), 12);
    }
}
