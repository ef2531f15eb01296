//! Decompositions of complete multipartite graphs with even part sizes into
//! the fewest planar subgraphs of girth at least four.
//!
//! The construction halves every part, splits the halved graph into forests
//! ([`forests`]), doubles each forest with the `G ⋈ G` product ([`bowtie`]),
//! and relabels the doubled vertices into the target ([`decomposer`]).
//! [`verify`] checks the result without reusing any of that code, and
//! [`oracle`] finds exact optima for tiny graphs by exhaustive search.

pub mod bounds;
pub mod bowtie;
pub mod decomposer;
pub mod error;
pub mod forests;
pub mod graph;
pub mod json;
pub mod oracle;
pub mod verify;

pub use bounds::{
    multipartite_arboricity, nash_williams_exact, planar_girth_edge_bound, theta4_lower_bound,
};
pub use bowtie::{bowtie_product, forest_bowtie_embedding, tree_bowtie_embedding, BowtieMap, RotationSystem};
pub use decomposer::{decompose_even_multipartite, theta4_formula, Decomposition, DecompositionClass};
pub use error::{BoundsError, DecomposeError, EmbeddingError, ForestError, GraphError, OracleError};
pub use forests::{arboricity_with_witness, decompose_into_forests, ForestDecomposition};
pub use graph::{complete_multipartite, Edge, Girth, Graph, MultipartiteSpec, VertexPartition};
pub use oracle::{exact_girth_thickness, OracleOutcome};
pub use verify::{audit_decomposition, is_planar, validate_embedding, AuditReport, ValidationReport};
