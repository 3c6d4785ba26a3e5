//! Solutions of the rational qKZ equation assembled from shifted singular
//! polynomials, and their verification.

mod build;
mod numeric;
mod rmatrix;
mod tensor;
mod verify;

pub use build::{build_solution, build_solution_with, component_from_word, validate_subdivision};
pub use numeric::verify_qkz_numeric;
pub use rmatrix::{r_matrix_apply, r_matrix_apply_slots};
pub use tensor::{TensorPoly, WeightProfile};
pub use verify::{
    k_multiplier, verify_cyclic, verify_cyclic_with, verify_eigenproblem, verify_exchange, verify_exchange_with,
    CheckKind, QkzParams, QkzReport,
};

#[cfg(test)]
mod tests;
