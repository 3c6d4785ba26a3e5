use std::sync::Arc;

use crate::combinat::Composition;
use crate::error::Result;
use crate::exactalg::{scalar_eval, BigRat, KPoly, QPoly};
use crate::exec::Execution;

use super::interp::InterpTable;
use super::memo::{Memo, MemoKind};
use super::nonsym::compute_nonsym;
use super::phi::PhiTable;
use super::result::{JackKind, JackResult, Method};

/// The non-symmetric Jack polynomial ξ_λ over ℚ(κ) (memoized).
pub fn nonsym_jack(lambda: &Composition) -> Result<Arc<JackResult>> {
    let memo = Memo::global();
    if let Some(r) = memo.get(lambda, MemoKind::Nonsymmetric) {
        return Ok(r);
    }
    let xi = compute_nonsym(lambda)?;
    Ok(memo.insert(
        MemoKind::Nonsymmetric,
        JackResult::new(lambda.clone(), xi, JackKind::Nonsymmetric),
    ))
}

/// The shifted non-symmetric Jack polynomial E_λ over ℚ(κ) (memoized).
pub fn shifted_jack(lambda: &Composition, method: Method) -> Result<Arc<JackResult>> {
    shifted_jack_with(lambda, method, Execution::default())
}

pub fn shifted_jack_with(lambda: &Composition, method: Method, exec: Execution) -> Result<Arc<JackResult>> {
    let memo = Memo::global();
    let kind = MemoKind::Shifted(method);
    if let Some(r) = memo.get(lambda, kind) {
        return Ok(r);
    }
    let e = match method {
        Method::ViaPhi => {
            let xi = nonsym_jack(lambda)?;
            PhiTable::global().phi_map(&xi.poly, exec)
        }
        Method::ViaInterpolation => (*InterpTable::global().shifted_jack(lambda, exec)?).clone(),
    };
    Ok(memo.insert(kind, JackResult::new(lambda.clone(), e, JackKind::Shifted)))
}

/// Evaluates every coefficient at `κ = κ₀`. A pole means the polynomial is
/// not defined there; the error names the monomial.
pub fn specialize(f: &KPoly, kappa0: &BigRat) -> Result<QPoly> {
    f.try_map_coeffs(|c| scalar_eval(c, kappa0))
}
