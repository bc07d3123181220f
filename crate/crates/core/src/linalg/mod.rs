//! Exact scalars over Q and F_p, dense matrices, and a sparse incremental solver.

mod field;
mod matrix;
mod sparse;

pub use field::{Field, Scalar, MAX_PRIME};
pub use matrix::{
    add_vectors, dot, is_zero_vector, scale_vector, sub_vectors, unit_vector, zero_vector, Matrix,
    Vector,
};
pub use sparse::SparseSystem;

