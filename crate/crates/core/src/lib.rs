//! Exact construction and verification of G-Frobenius algebras.
//!
//! The central objects are [`gfrob::GFrobeniusAlgebra`], the second
//! quantization [`symprod`] of a base [`frobenius::FrobeniusAlgebra`] for the
//! symmetric group, and discrete-torsion twists from [`cocycles`]. All
//! arithmetic is over exact rationals.

pub mod cocycles;
pub mod error;
pub mod exactnum;
pub mod frobenius;
pub mod gfrob;
pub mod grading;
pub mod groups;
pub mod io;
pub mod report;
pub mod symprod;

pub use error::{Error, Result};
