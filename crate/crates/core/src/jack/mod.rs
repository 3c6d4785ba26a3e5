//! Non-symmetric Jack polynomials ξ_λ, their shifted analogues E_λ, the
//! isomorphism Φ between them, specialization of κ and singularity tests.

mod construct;
mod interp;
mod memo;
mod nonsym;
mod oracle;
mod phi;
mod result;
mod singular;

pub use construct::{nonsym_jack, shifted_jack, shifted_jack_with, specialize};
pub use interp::InterpTable;
pub use memo::{Memo, MemoKind};
pub use oracle::{factorized_oracle, FactorizedOracle};
pub use phi::{phi_inverse, phi_map, PhiTable};
pub use result::{JackKind, JackResult, Method};
pub use singular::{is_shifted_singular, is_singular, t_action_decompose, TActionReport, TCase};
