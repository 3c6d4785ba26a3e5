//! Direct implementations of the operators of both polynomial
//! representations. All public indices are 1-based.

use crate::error::{check_index, Error, Result};
use crate::exactalg::{KPoly, KappaScalar, MultiPoly, Scalar};

/// The operators at a fixed value of the parameter κ (the indeterminate for
/// [`DahaOps::generic`], a rational for specialized work).
#[derive(Clone, Debug)]
pub struct DahaOps<C> {
    kappa: C,
}

impl DahaOps<KappaScalar> {
    pub fn generic() -> Self {
        DahaOps {
            kappa: KappaScalar::kappa(),
        }
    }
}

fn check_adjacent(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

impl<C: Scalar> DahaOps<C> {
    pub fn new(kappa: C) -> Self {
        DahaOps { kappa }
    }

    pub fn kappa(&self) -> &C {
        &self.kappa
    }

    // ---- x-side: φ ----

    /// σ_ij on variables.
    pub fn sigma(&self, i: usize, j: usize, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        f.transpose_vars(i, j)
    }

    /// The Dunkl operator `κ∂_i + Σ_{j≠i} (1 − σ_ij)/(x_i − x_j)`.
    pub fn dunkl(&self, i: usize, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        check_index(i, f.nvars())?;
        Ok(self.dunkl0(i - 1, f))
    }

    pub(crate) fn dunkl0(&self, i: usize, f: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = f.derivative0(i).scale(&self.kappa);
        let one = C::one();
        for j in 0..f.nvars() {
            if j != i {
                f.divdiff0_into(i, j, &one, &mut out);
            }
        }
        out
    }

    /// φ(u_i) = x_i D_i + Σ_{k>i} σ_ik.
    pub fn cherednik_u(&self, i: usize, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        check_index(i, f.nvars())?;
        Ok(self.cherednik_u0(i - 1, f))
    }

    pub(crate) fn cherednik_u0(&self, i: usize, f: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.dunkl0(i, f).mul_var0(i);
        let one = C::one();
        for k in i + 1..f.nvars() {
            out.add_scaled(&f.swap0(i, k), &one);
        }
        out
    }

    // ---- z-side: ψ ----

    /// The Demazure–Lusztig operator `T_i = σ + (1 − σ)/(z_i − z_{i+1})`.
    pub fn demazure_lusztig(&self, i: usize, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        check_adjacent(i, f.nvars())?;
        Ok(self.t0(i - 1, f))
    }

    pub(crate) fn t0(&self, i: usize, f: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = f.swap0(i, i + 1);
        f.divdiff0_into(i, i + 1, &C::one(), &mut out);
        out
    }

    /// `(ωf)(z) = f(z_n − κ, z_1, …, z_{n−1})`.
    pub fn omega(&self, f: &MultiPoly<C>) -> MultiPoly<C> {
        let n = f.nvars();
        if n == 0 {
            return f.clone();
        }
        let rotated = MultiPoly::from_terms(
            n,
            f.terms().map(|(m, c)| {
                let mut m = m.clone();
                m.exps_mut().rotate_left(1);
                (m, c.clone())
            }),
        );
        rotated.shift0(n - 1, &self.kappa.neg())
    }

    /// `Y_i = T_i ⋯ T_{n−1} ω T_1 ⋯ T_{i−1}`.
    pub fn y_op(&self, i: usize, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        check_index(i, f.nvars())?;
        Ok(self.y0(i - 1, f))
    }

    pub(crate) fn y0(&self, i: usize, f: &MultiPoly<C>) -> MultiPoly<C> {
        let n = f.nvars();
        let mut g = f.clone();
        for k in (0..i).rev() {
            g = self.t0(k, &g);
        }
        g = self.omega(&g);
        for k in (i..n - 1).rev() {
            g = self.t0(k, &g);
        }
        g
    }

    /// `T_ik = ψ(s_ik)` along the word `(s_i ⋯ s_{k−1})(s_{k−2} ⋯ s_i)`.
    pub fn t_ik(&self, i: usize, k: usize, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        check_index(i, f.nvars())?;
        check_index(k, f.nvars())?;
        if i >= k {
            return Err(Error::InvalidParams(format!("T_ik needs i < k, got ({i}, {k})")));
        }
        let mut g = f.clone();
        for &letter in s_ik_word(i, k).iter().rev() {
            g = self.t0(letter - 1, &g);
        }
        Ok(g)
    }

    /// `Σ_{k>i} T_ik` (0-based `i`), via `T_ik = T_i T_{i+1,k} T_i`.
    pub(crate) fn s_sum0(&self, i: usize, f: &MultiPoly<C>) -> MultiPoly<C> {
        let n = f.nvars();
        if i + 1 >= n {
            return MultiPoly::zero(n);
        }
        let ti = self.t0(i, f);
        let mut inner = f.clone();
        inner.add_scaled(&self.s_sum0(i + 1, &ti), &C::one());
        self.t0(i, &inner)
    }

    /// ψ(v_i) = z_i(1 − Y_i) + Σ_{k>i} T_ik Y_i.
    pub fn psi_v(&self, i: usize, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        check_index(i, f.nvars())?;
        Ok(self.psi_v0(i - 1, f))
    }

    pub(crate) fn psi_v0(&self, i: usize, f: &MultiPoly<C>) -> MultiPoly<C> {
        let y = self.y0(i, f);
        let mut out = f.sub(&y).mul_var0(i);
        out.add_scaled(&self.s_sum0(i, &y), &C::one());
        out
    }

    /// ψ(û_i) = (z_i − Σ_{k>i} T_ik) Y_i.
    pub fn psi_uhat(&self, i: usize, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        check_index(i, f.nvars())?;
        Ok(self.psi_uhat0(i - 1, f))
    }

    pub(crate) fn psi_uhat0(&self, i: usize, f: &MultiPoly<C>) -> MultiPoly<C> {
        let y = self.y0(i, f);
        let mut out = y.mul_var0(i);
        out.add_scaled(&self.s_sum0(i, &y), &C::one().neg());
        out
    }
}

/// The letters of `s_ik = (s_i ⋯ s_{k−1})(s_{k−2} ⋯ s_i)` for `i < k`.
pub fn s_ik_word(i: usize, k: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (i..k).collect();
    w.extend((i..k - 1).rev());
    w
}

/// [`DahaOps::dunkl`] over ℚ(κ).
pub fn dunkl(i: usize, f: &KPoly) -> Result<KPoly> {
    DahaOps::generic().dunkl(i, f)
}

/// [`DahaOps::cherednik_u`] over ℚ(κ).
pub fn cherednik_u(i: usize, f: &KPoly) -> Result<KPoly> {
    DahaOps::generic().cherednik_u(i, f)
}

/// [`DahaOps::demazure_lusztig`] over ℚ(κ).
pub fn demazure_lusztig(i: usize, f: &KPoly) -> Result<KPoly> {
    DahaOps::generic().demazure_lusztig(i, f)
}

/// [`DahaOps::omega`] over ℚ(κ).
pub fn omega(f: &KPoly) -> KPoly {
    DahaOps::generic().omega(f)
}

/// [`DahaOps::y_op`] over ℚ(κ).
pub fn y_op(i: usize, f: &KPoly) -> Result<KPoly> {
    DahaOps::generic().y_op(i, f)
}

/// [`DahaOps::psi_v`] over ℚ(κ).
pub fn psi_v(i: usize, f: &KPoly) -> Result<KPoly> {
    DahaOps::generic().psi_v(i, f)
}

/// [`DahaOps::psi_uhat`] over ℚ(κ).
pub fn psi_uhat(i: usize, f: &KPoly) -> Result<KPoly> {
    DahaOps::generic().psi_uhat(i, f)
}
