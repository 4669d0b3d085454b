//! Finitely presented groups: Fox calculus, abelianization, Alexander
//! matrices and degree-one jump loci of presentation complexes.

mod alexander;
mod presentation;
mod word;

pub use alexander::{
    alexander_matrix, charvar1_member, cyclic_cover_finite, fox_identity_lhs, fox_identity_rhs,
    minors_capped, sigma1_upper_bound, sigma1_upper_bound_capped, AlexanderMatrix,
    DEFAULT_MAX_MINORS,
};
pub use presentation::{parse_presentation, AbelianizationData, GroupPresentation};
pub use word::{fox_derivative, parse_word, FreeGroupRingElement, Word};
