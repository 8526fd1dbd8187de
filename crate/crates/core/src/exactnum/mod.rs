//! Exact rational linear algebra: scalars, dense matrices and sparse
//! vectors. There is no floating point anywhere in this crate.

mod matrix;
mod scalar;
mod sparse;

pub use matrix::{invert, metric_adjoint, rank, solve, Matrix, Vector};
pub use scalar::Scalar;
pub use sparse::{SparseAccumulator, SparseEchelon, SparseTensor3, SparseVec};
