//! Operator expressions built from primitive actions on polynomials.

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, Scalar};

use super::ops::{s_ik_word, DahaOps};

/// A composable operator on polynomials in a fixed number of variables.
///
/// `Compose([A, B, C])` is `A ∘ B ∘ C`: `C` acts first.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorExpr<C> {
    Identity,
    /// Multiplication by the 1-based variable `i`.
    MulVar(usize),
    Transpose(usize, usize),
    DividedDifference(usize, usize),
    /// `κ ∂_i`.
    KappaDerivative(usize),
    /// The shift-rotate `ω`.
    ShiftRotate,
    Scalar(C),
    Sum(Vec<OperatorExpr<C>>),
    Compose(Vec<OperatorExpr<C>>),
}

impl<C: Scalar> OperatorExpr<C> {
    pub fn compose(self, inner: OperatorExpr<C>) -> Self {
        OperatorExpr::Compose(vec![self, inner])
    }

    pub fn plus(self, rhs: OperatorExpr<C>) -> Self {
        OperatorExpr::Sum(vec![self, rhs])
    }

    pub fn minus(self, rhs: OperatorExpr<C>) -> Self {
        OperatorExpr::Sum(vec![self, OperatorExpr::Compose(vec![OperatorExpr::Scalar(C::one().neg()), rhs])])
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(a: OperatorExpr<C>, b: OperatorExpr<C>) -> Self {
        a.clone().compose(b.clone()).minus(b.compose(a))
    }

    pub fn sigma(i: usize, j: usize) -> Self {
        OperatorExpr::Transpose(i, j)
    }

    /// `D_i = κ∂_i + Σ_{j≠i} ∂_ij`.
    pub fn dunkl(n: usize, i: usize) -> Self {
        let mut parts = vec![OperatorExpr::KappaDerivative(i)];
        parts.extend((1..=n).filter(|&j| j != i).map(|j| OperatorExpr::DividedDifference(i, j)));
        OperatorExpr::Sum(parts)
    }

    /// `φ(u_i) = x_i D_i + Σ_{k>i} σ_ik`.
    pub fn cherednik_u(n: usize, i: usize) -> Self {
        let mut parts = vec![OperatorExpr::MulVar(i).compose(Self::dunkl(n, i))];
        parts.extend((i + 1..=n).map(|k| OperatorExpr::Transpose(i, k)));
        OperatorExpr::Sum(parts)
    }

    /// `φ(s_ij)`: the transposition itself.
    pub fn phi_s_ik(i: usize, k: usize) -> Self {
        OperatorExpr::Transpose(i, k)
    }

    /// `T_i = σ_{i,i+1} + ∂_{i,i+1}`.
    pub fn t(i: usize) -> Self {
        OperatorExpr::Transpose(i, i + 1).plus(OperatorExpr::DividedDifference(i, i + 1))
    }

    pub fn omega() -> Self {
        OperatorExpr::ShiftRotate
    }

    /// `T_ik` along the word of `s_ik`.
    pub fn t_ik(i: usize, k: usize) -> Self {
        OperatorExpr::Compose(s_ik_word(i, k).into_iter().map(Self::t).collect())
    }

    /// `Y_i = T_i ⋯ T_{n−1} ω T_1 ⋯ T_{i−1}`.
    pub fn y(n: usize, i: usize) -> Self {
        let mut parts: Vec<_> = (i..n).map(Self::t).collect();
        parts.push(OperatorExpr::ShiftRotate);
        parts.extend((1..i).map(Self::t));
        OperatorExpr::Compose(parts)
    }

    fn s_sum(n: usize, i: usize) -> Self {
        OperatorExpr::Sum((i + 1..=n).map(|k| Self::t_ik(i, k)).collect())
    }

    /// `ψ(v_i) = z_i(1 − Y_i) + Σ_{k>i} T_ik Y_i`.
    pub fn psi_v(n: usize, i: usize) -> Self {
        let y = Self::y(n, i);
        OperatorExpr::MulVar(i)
            .compose(OperatorExpr::Identity.minus(y.clone()))
            .plus(Self::s_sum(n, i).compose(y))
    }

    /// `ψ(û_i) = (z_i − Σ_{k>i} T_ik) Y_i`.
    pub fn psi_uhat(n: usize, i: usize) -> Self {
        OperatorExpr::MulVar(i).minus(Self::s_sum(n, i)).compose(Self::y(n, i))
    }

    /// Checks every index against `n` variables.
    pub fn validate(&self, n: usize) -> Result<()> {
        let check = |i: usize| {
            if i == 0 || i > n {
                Err(Error::IndexOutOfRange { index: i, max: n })
            } else {
                Ok(())
            }
        };
        match self {
            OperatorExpr::Identity | OperatorExpr::ShiftRotate | OperatorExpr::Scalar(_) => Ok(()),
            OperatorExpr::MulVar(i) | OperatorExpr::KappaDerivative(i) => check(*i),
            OperatorExpr::Transpose(i, j) => {
                check(*i)?;
                check(*j)
            }
            OperatorExpr::DividedDifference(i, j) => {
                check(*i)?;
                check(*j)?;
                if i == j {
                    return Err(Error::InvalidParams("divided difference needs i != j".into()));
                }
                Ok(())
            }
            OperatorExpr::Sum(v) | OperatorExpr::Compose(v) => v.iter().try_for_each(|e| e.validate(n)),
        }
    }

    /// Applies the expression to `f` with parameter `ops.kappa()`.
    pub fn apply(&self, ops: &DahaOps<C>, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        self.validate(f.nvars())?;
        Ok(self.apply_unchecked(ops, f))
    }

    fn apply_unchecked(&self, ops: &DahaOps<C>, f: &MultiPoly<C>) -> MultiPoly<C> {
        match self {
            OperatorExpr::Identity => f.clone(),
            OperatorExpr::MulVar(i) => f.mul_var0(i - 1),
            OperatorExpr::Transpose(i, j) => f.swap0(i - 1, j - 1),
            OperatorExpr::DividedDifference(i, j) => f.divdiff0(i - 1, j - 1),
            OperatorExpr::KappaDerivative(i) => f.derivative0(i - 1).scale(ops.kappa()),
            OperatorExpr::ShiftRotate => ops.omega(f),
            OperatorExpr::Scalar(c) => f.scale(c),
            OperatorExpr::Sum(v) => {
                let mut out = MultiPoly::zero(f.nvars());
                for e in v {
                    out.add_scaled(&e.apply_unchecked(ops, f), &C::one());
                }
                out
            }
            OperatorExpr::Compose(v) => {
                let mut g = f.clone();
                for e in v.iter().rev() {
                    g = e.apply_unchecked(ops, &g);
                }
                g
            }
        }
    }
}
