//! Σ-invariants of right-angled Artin groups, Dwyer–Fried finiteness of
//! free abelian covers of toric complexes, and Artin kernels.

mod character;
mod kernels;
mod sigma;

pub use character::{parse_character, parse_epimorphism, Character, EpimorphismZr};
pub use kernels::{
    artin_kernel_sigma1_bound, artin_kernel_v11, bestvina_brady_predicates, dwyer_fried_toric,
    dwyer_fried_toric_capped, maximal_disconnected_supports, minimal_separators,
    ArtinKernelBound, BestvinaBradyPredicates,
};
pub use sigma::{sigma_describe, sigma_describe_capped, sigma_member, support_is_good, SupportVerdictTable};
