use serde::Serialize;

use crate::combinat::Composition;
use crate::daha::{DahaOps, Status};
use crate::error::{check_index, Result};
use crate::exactalg::{BigRat, KPoly, KappaScalar, QPoly, Scalar};

use super::construct::shifted_jack;
use super::result::Method;

/// `f` is annihilated by every Dunkl operator at `κ = κ₀`.
pub fn is_singular(f: &QPoly, kappa0: &BigRat) -> bool {
    let ops = DahaOps::new(kappa0.clone());
    (1..=f.nvars()).all(|i| ops.dunkl(i, f).expect("index in range").is_zero())
}

/// `g` is fixed by every `Y_i` at `κ = κ₀`.
pub fn is_shifted_singular(g: &QPoly, kappa0: &BigRat) -> bool {
    let ops = DahaOps::new(kappa0.clone());
    (1..=g.nvars()).all(|i| &ops.y_op(i, g).expect("index in range") == g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TCase {
    Greater,
    Equal,
    Less,
}

/// Outcome of checking the three-case formula for `T_i E_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TActionReport {
    pub mu: Composition,
    pub i: usize,
    pub case: TCase,
    /// `a_i(μ) = 1/(c_i(μ) − c_{i+1}(μ))`.
    pub a: KappaScalar,
    /// `b_i(μ) = 1 − a_i(μ)²`.
    pub b: KappaScalar,
    pub status: Status,
}

impl TActionReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "mu": self.mu.parts(),
            "i": self.i,
            "case": self.case,
            "a": crate::exactalg::ScalarJson::from_scalar(&self.a),
            "b": crate::exactalg::ScalarJson::from_scalar(&self.b),
            "status": self.status,
        })
    }
}

/// Applies `T_i` to `E_μ` and compares with `a E_μ + b E_{s_iμ}`,
/// `E_μ`, or `a E_μ + E_{s_iμ}` according to the sign of `μ_i − μ_{i+1}`.
pub fn t_action_decompose(mu: &Composition, i: usize) -> Result<TActionReport> {
    let n = mu.len();
    check_index(i, n.saturating_sub(1))?;
    let spec = crate::combinat::spectral_vector(mu);
    let gap = spec.get(i).sub(spec.get(i + 1));
    let a = gap.inv().unwrap_or_else(KappaScalar::zero);
    let b = KappaScalar::one().sub(&a.mul(&a));
    let e = shifted_jack(mu, Method::ViaPhi)?;
    let lhs = DahaOps::generic().demazure_lusztig(i, &e.poly)?;
    let (p, q) = (mu.parts()[i - 1], mu.parts()[i]);
    let case = match p.cmp(&q) {
        std::cmp::Ordering::Greater => TCase::Greater,
        std::cmp::Ordering::Equal => TCase::Equal,
        std::cmp::Ordering::Less => TCase::Less,
    };
    let rhs: KPoly = match case {
        TCase::Equal => e.poly.clone(),
        _ => {
            let other = shifted_jack(&mu.swap_adjacent(i), Method::ViaPhi)?;
            let coeff = if case == TCase::Greater { b.clone() } else { KappaScalar::one() };
            let mut r = e.poly.scale(&a);
            r.add_scaled(&other.poly, &coeff);
            r
        }
    };
    let status = if lhs == rhs { Status::Pass } else { Status::Fail };
    Ok(TActionReport {
        mu: mu.clone(),
        i,
        case,
        a,
        b,
        status,
    })
}
