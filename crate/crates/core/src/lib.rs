//! Exact computations in the polynomial representations of the degenerate
//! double affine Hecke algebra: non-symmetric and shifted non-symmetric Jack
//! polynomials, singular polynomials, and polynomial solutions of the
//! rational qKZ equation.

pub mod error;
pub mod combinat;
pub mod exactalg;
pub mod exec;
pub mod daha;
pub mod jack;
pub mod qkz;

pub use error::{Error, Result};
