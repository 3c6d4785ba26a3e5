//! The rational R-matrix `R(u) = (u + P)/(u + 1)` acting on tensor slots,
//! with the denominator kept separate.

use crate::error::{check_index, Error, Result};
use crate::exactalg::{MultiPoly, Scalar};

use super::tensor::TensorPoly;

/// `(u + P_ab) t` and the denominator `u + 1`, for slots `a ≠ b` (1-based)
/// and an argument `u` given as a polynomial in `z`.
pub fn r_matrix_apply_slots<C: Scalar>(
    t: &TensorPoly<C>,
    a: usize,
    b: usize,
    u: &MultiPoly<C>,
) -> Result<(TensorPoly<C>, MultiPoly<C>)> {
    let n = t.n();
    check_index(a, n)?;
    check_index(b, n)?;
    if a == b {
        return Err(Error::InvalidParams("R-matrix needs two distinct slots".into()));
    }
    let mut out = TensorPoly::zero(t.profile.clone());
    for eps in t.profile.index_set() {
        let mut swapped = eps.clone();
        swapped.swap(a - 1, b - 1);
        let mut v = u.mul(&t.component(eps));
        v.add_scaled(&t.component(&swapped), &C::one());
        out.set(eps.clone(), v)?;
    }
    Ok((out, u.add(&MultiPoly::one(n))))
}

/// `R_{i,i+1}(z_i − z_{i+1})` in cleared form: the numerator action of
/// `(z_i − z_{i+1}) + P` and the denominator `z_i − z_{i+1} + 1`.
pub fn r_matrix_apply<C: Scalar>(t: &TensorPoly<C>, i: usize) -> Result<(TensorPoly<C>, MultiPoly<C>)> {
    let n = t.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let u = MultiPoly::var(n, i).sub(&MultiPoly::var(n, i + 1));
    r_matrix_apply_slots(t, i, i + 1, &u)
}
