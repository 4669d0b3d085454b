//! Resonance and characteristic varieties of toric complexes `T_L`.
//!
//! Both are unions of coordinate pieces indexed by supports `W ⊆ V`, chosen by
//! the Betti numbers `β_i(z_W)` of the exterior face ring. Two independent
//! oracles (the Aomoto complex itself and the twisted chain complex of `T_L`)
//! compute the same numbers pointwise.

mod arrangement;
mod betti;

pub use arrangement::{
    charvar_arrangement, charvar_arrangement_capped, resonance_arrangement,
    resonance_arrangement_capped, ArrangementKind, CoordinateArrangement, SupportTable,
    DEFAULT_MAX_SWEEP_VERTICES,
};
pub use betti::{
    aomoto_betti, aomoto_betti_numbers, aomoto_oracle, aomoto_oracle_numbers,
    twisted_betti_numbers, twisted_betti_oracle,
};

pub(crate) use arrangement::arrangement_from_table;
