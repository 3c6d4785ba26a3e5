//! The polynomial representations of the degenerate DAHA as executable
//! operators: φ on `𝔽[x]` (Dunkl–Cherednik) and ψ on `𝔽[z]` (difference
//! operators), plus a relation checker.

mod expr;
mod ops;
mod relations;

pub use expr::OperatorExpr;
pub use ops::{cherednik_u, demazure_lusztig, dunkl, omega, psi_uhat, psi_v, s_ik_word, y_op, DahaOps};
pub use relations::{
    check_daha_relations, check_daha_relations_with, check_relations, daha_relations, Relation, RelationReport, Status,
};

#[cfg(test)]
mod properties;
