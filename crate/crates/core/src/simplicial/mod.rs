//! Finite simplicial complexes, graphs and their reduced homology.

mod complex;
mod graph;
mod homology;
mod text;
mod vertexset;

pub use complex::{induced_subcomplex, link, SimplicialComplex};
pub use graph::{flag_complex, graph_connectivity, Connectivity, Graph};
pub use homology::{reduced_homology, reduced_homology_upto, HomologyProfile};
pub use text::{complex_to_text, graph_to_text, parse_complex, parse_graph};
pub use vertexset::{VertexIter, VertexSet, MAX_VERTICES};

pub(crate) use homology::{acyclic_through, link_profile};
pub(crate) use text::keyed_lines;

/// Barycentric subdivision, see [`SimplicialComplex::barycentric_subdivision`].
pub fn barycentric_subdivision(k: &SimplicialComplex) -> crate::Result<SimplicialComplex> {
    k.barycentric_subdivision()
}
