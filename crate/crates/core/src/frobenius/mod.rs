//! Finite-dimensional graded Frobenius algebras `(A, η, 1)` with
//! multiplication, copairing, Euler class and factorwise tensor powers.

mod algebra;
pub mod models;
mod tensor;

pub(crate) use algebra::format_linear;
pub use algebra::{BasisElement, FrobeniusAlgebra};
pub use tensor::{tensor_of, TensorSpace};
