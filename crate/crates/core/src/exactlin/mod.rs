//! Exact linear algebra over `Q`, `F_p` and `Z`.

mod field;
mod matrix;
mod snf;
mod subspace;

pub use field::{Coefficients, Field, FieldOps, PrimeField, Rationals};
pub use matrix::{
    kernel_basis, primitive_integer_vector, rank_over, rank_over_field, rref, IntegerMatrix,
    Matrix, RationalMatrix,
};
pub use snf::{smith_normal_form, smith_normal_form_with_transforms, SmithForm};
pub use subspace::{
    rowspace_meets_coordinate_subspace, subspace_intersect, subspace_member, SubspaceQ,
};

pub(crate) use matrix::small_rank;
