//! Exact arithmetic over ℚ(κ) and sparse multivariate polynomials.

mod format;
mod json;
mod kappa;
mod linalg;
mod monomial;
mod poly;
mod rational;
mod scalar;
mod upoly;

pub use format::{render_latex, render_text};
pub use json::{PolyJson, ScalarJson, TermJson};
pub use kappa::{scalar_eval, KappaScalar};
pub use linalg::solve_linear;
pub use monomial::{global_cmp, Monomial};
pub use poly::{MultiPoly, PolyOp};
pub use rational::{format_rat, int, parse_rat, rat, rat_to_f64, BigRat};
pub use scalar::Scalar;
pub use upoly::UPoly;

/// Polynomial with coefficients in ℚ(κ).
pub type KPoly = MultiPoly<KappaScalar>;
/// Polynomial with rational coefficients (κ specialized).
pub type QPoly = MultiPoly<BigRat>;
