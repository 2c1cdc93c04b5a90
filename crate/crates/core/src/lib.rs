//! Vertex-decomposition certificates for independence complexes of
//! complements of connected bipartite graphs.
//!
//! The complement of a connected bipartite graph has a vertex decomposable
//! independence complex. [`decompose::decompose_bipartite_complement`]
//! builds an explicit certificate of that, [`decompose::verify_certificate`]
//! checks one against the complex using nothing but the definitions, and
//! [`shedding::BruteForceOracle`] decides vertex decomposability
//! exhaustively for cross-checking on small inputs.

pub mod complex;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod harness;
pub mod set;
pub mod shedding;

pub use complex::SimplicialComplex;
pub use decompose::{
    decompose_bipartite_complement, decompose_clique_union, is_shelling_order,
    shelling_from_certificate, verify_certificate, Certificate, CertificateDocument, Leaf, Rule,
    ShellingOrder,
};
pub use error::{Error, Result};
pub use graph::{Bipartiteness, Bipartition, Graph, InducedSubgraph};
pub use set::{VertexSet, MAX_VERTICES};
pub use shedding::{
    is_shedding_vertex_complex, is_shedding_vertex_graph, is_vertex_decomposable_bruteforce,
    shedding_vertices, simplicial_vertices, BruteForceOracle,
};
