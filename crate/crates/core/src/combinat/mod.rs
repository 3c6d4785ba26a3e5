//! Compositions, permutations and the special families of compositions and
//! parameter values.

mod composition;
mod permutation;
mod singular;
mod spectral;

pub use composition::{compositions_of_weight, dominance_leq, dominant_rep, enumerate_compositions, Composition};
pub use permutation::{apply_word, sort_word, Permutation, ReducedWord};
pub use singular::{lambda_family, singular_values, SingularParams};
pub use spectral::{spectral_coords, spectral_vector, SpectralVector};
