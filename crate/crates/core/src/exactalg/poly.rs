//! Sparse multivariate polynomials over an exact [`Scalar`] field.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::monomial::{global_cmp, Monomial};
use super::scalar::Scalar;
use crate::error::{check_index, Error, Result};

/// A polynomial in `nvars` variables. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl<C: Scalar> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The variable with 1-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable index out of range");
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i - 1), C::one());
        p
    }

    pub fn monomial(exps: &[u16], c: C) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(Monomial::from_exps(exps), c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in storage order (lexicographic on exponents).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Terms sorted by the global order, highest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| global_cmp(b.0.exps(), a.0.exps()));
        v
    }

    pub fn coeff(&self, exps: &[u16]) -> Option<&C> {
        self.terms.get(&Monomial::from_exps(exps))
    }

    pub fn coeff_or_zero(&self, exps: &[u16]) -> C {
        self.coeff(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &C) {
        assert_eq!(self.nvars, other.nvars, "arity mismatch");
        if factor.is_zero() {
            return;
        }
        let unit = factor.is_one();
        for (m, c) in &other.terms {
            let c = if unit { c.clone() } else { c.mul(factor) };
            self.add_term(m.clone(), c);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one().neg());
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut m = ma.clone();
                for (e, f) in m.exps_mut().iter_mut().zip(mb.exps()) {
                    *e += f;
                }
                out.add_term(m, ca.mul(cb));
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, factor: &C) -> Self {
        if factor.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(factor))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, degree: usize) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by the 0-based variable `i`.
    pub(crate) fn mul_var0(&self, i: usize) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.exps_mut()[i] += 1;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Swaps the 0-based variables `i` and `j`.
    pub(crate) fn swap0(&self, i: usize, j: usize) -> Self {
        if i == j {
            return self.clone();
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.swapped(i, j), c.clone())).collect(),
        }
    }

    /// `((1 - σ_ij) f) / (x_i - x_j)` for 0-based `i != j`.
    ///
    /// Each monomial `x^a` pairs with its image `σ_ij x^a`; the difference is
    /// `x^r (x_i x_j)^q (x_i^{p-q} - x_j^{p-q})` up to sign, whose quotient by
    /// `x_i - x_j` is a geometric sum, so the division is exact term by term.
    pub(crate) fn divdiff0(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        self.divdiff0_into(i, j, &C::one(), &mut out);
        out
    }

    /// Adds `factor · divdiff0(i, j)` into `out`.
    pub(crate) fn divdiff0_into(&self, i: usize, j: usize, factor: &C, out: &mut Self) {
        debug_assert_ne!(i, j);
        for (m, c) in &self.terms {
            let p = m.get(i);
            let q = m.get(j);
            if p == q {
                continue;
            }
            let (hi, lo, c) = if p > q {
                (p, q, c.mul(factor))
            } else {
                (q, p, c.mul(factor).neg())
            };
            // Σ_{t=0}^{hi-lo-1} x_i^{lo + hi-lo-1-t} x_j^{lo + t}
            let span = hi - lo;
            for t in 0..span {
                let mut e = m.clone();
                e.exps_mut()[i] = lo + span - 1 - t;
                e.exps_mut()[j] = lo + t;
                out.add_term(e, c.clone());
            }
        }
    }

    /// Partial derivative in the 0-based variable `i`.
    pub(crate) fn derivative0(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.get(i);
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.exps_mut()[i] = e - 1;
            out.add_term(d, c.mul(&C::from_int(e as i64)));
        }
        out
    }

    /// Replaces the 0-based variable `i` by `x_i + offset`.
    pub(crate) fn shift0(&self, i: usize, offset: &C) -> Self {
        if offset.is_zero() {
            return self.clone();
        }
        let max_e = self.terms.keys().map(|m| m.get(i)).max().unwrap_or(0) as usize;
        let offset_pows = powers(offset, max_e);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.get(i) as usize;
            // (x + a)^e = Σ_k binom(e,k) a^{e-k} x^k
            let mut binom: i64 = 1;
            for k in (0..=e).rev() {
                let mut t = m.clone();
                t.exps_mut()[i] = k as u16;
                let coeff = c.mul(&offset_pows[e - k]).mul(&C::from_int(binom));
                out.add_term(t, coeff);
                // binom(e, k-1) from binom(e, k)
                if k > 0 {
                    binom = binom * k as i64 / (e - k + 1) as i64;
                }
            }
        }
        out
    }

    /// Checked ring operation.
    pub fn poly_arith(&self, rhs: &Self, op: PolyOp) -> Result<Self> {
        if self.nvars != rhs.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: rhs.nvars,
            });
        }
        Ok(match op {
            PolyOp::Add => self.add(rhs),
            PolyOp::Sub => self.sub(rhs),
            PolyOp::Mul => self.mul(rhs),
        })
    }

    /// σ_ij with 1-based indices.
    pub fn transpose_vars(&self, i: usize, j: usize) -> Result<Self> {
        check_index(i, self.nvars)?;
        check_index(j, self.nvars)?;
        Ok(self.swap0(i - 1, j - 1))
    }

    /// `((1 - σ_ij) f) / (x_i - x_j)` with 1-based indices.
    pub fn divided_difference(&self, i: usize, j: usize) -> Result<Self> {
        check_index(i, self.nvars)?;
        check_index(j, self.nvars)?;
        if i == j {
            return Err(Error::InvalidParams("divided difference needs i != j".into()));
        }
        Ok(self.divdiff0(i - 1, j - 1))
    }

    /// Substitutes `x_i ↦ x_i + offset` (1-based `i`).
    pub fn shift_substitute(&self, i: usize, offset: &C) -> Result<Self> {
        check_index(i, self.nvars)?;
        Ok(self.shift0(i - 1, offset))
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        check_index(i, self.nvars)?;
        Ok(self.derivative0(i - 1))
    }

    /// Exact value at `point`.
    pub fn eval(&self, point: &[C]) -> Result<C> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let maxdeg = self.terms.keys().flat_map(|m| m.exps().iter().copied()).max().unwrap_or(0) as usize;
        let pows: Vec<Vec<C>> = point.iter().map(|v| powers(v, maxdeg)).collect();
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&pows[k][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Applies `f` to every coefficient, dropping zeros. Errors carry the
    /// monomial when they are poles.
    pub fn try_map_coeffs<D: Scalar>(&self, mut f: impl FnMut(&C) -> Result<D>) -> Result<MultiPoly<D>> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let v = f(c).map_err(|e| match e {
                Error::PoleAtKappa { kappa, .. } => Error::PoleAtKappa {
                    kappa,
                    monomial: Some(m.to_u32_vec()),
                },
                other => other,
            })?;
            out.add_term(m.clone(), v);
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Scalar>(&self, mut f: impl FnMut(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Coefficient of the highest monomial in the global order.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| global_cmp(a.0.exps(), b.0.exps()))
    }
}

fn powers<C: Scalar>(base: &C, max: usize) -> Vec<C> {
    let mut v = Vec::with_capacity(max + 1);
    v.push(C::one());
    for k in 1..=max {
        let next = v[k - 1].mul(base);
        v.push(next);
    }
    v
}

impl<C: Scalar> std::fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::format::render_text(self, 'x'))
    }
}

#[cfg(test)]
mod tests {
    use super::super::kappa::KappaScalar;
    use super::super::rational::{int, BigRat};
    use super::*;

    type P = MultiPoly<BigRat>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    fn c(n: usize, v: i64) -> P {
        P::constant(n, int(v))
    }

    #[test]
    fn arithmetic_examples() {
        assert!(x(1, 1).add(&x(1, 1).neg()).is_zero());
        let lhs = x(4, 1).sub(&x(4, 2)).mul(&x(4, 3).sub(&x(4, 4)));
        let mut rhs = P::zero(4);
        rhs.add_term(Monomial::from_exps(&[1, 0, 1, 0]), int(1));
        rhs.add_term(Monomial::from_exps(&[1, 0, 0, 1]), int(-1));
        rhs.add_term(Monomial::from_exps(&[0, 1, 1, 0]), int(-1));
        rhs.add_term(Monomial::from_exps(&[0, 1, 0, 1]), int(1));
        assert_eq!(lhs, rhs);

        let a = x(4, 1).sub(&x(4, 2)).sub(&c(4, 1));
        let b = x(4, 3).sub(&x(4, 4)).sub(&c(4, 1));
        let prod = a.mul(&b);
        assert_eq!(prod.num_terms(), 9);
        assert_eq!(prod.coeff(&[0, 0, 0, 0]), Some(&int(1)));

        assert!(matches!(
            x(2, 1).poly_arith(&x(3, 1), PolyOp::Add),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(x(2, 1).transpose_vars(1, 2).unwrap(), x(2, 2));
        let x1x2 = x(2, 1).mul(&x(2, 2));
        assert_eq!(x1x2.transpose_vars(1, 2).unwrap(), x1x2);
        let f = P::monomial(&[2, 1], int(1));
        assert_eq!(f.transpose_vars(1, 2).unwrap(), P::monomial(&[1, 2], int(1)));
        assert!(matches!(f.transpose_vars(1, 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(x(2, 1).divided_difference(1, 2).unwrap(), c(2, 1));
        let sq = P::monomial(&[2, 0], int(1));
        assert_eq!(sq.divided_difference(1, 2).unwrap(), x(2, 1).add(&x(2, 2)));
        assert!(x(2, 1).mul(&x(2, 2)).divided_difference(1, 2).unwrap().is_zero());
    }

    #[test]
    fn shift_examples() {
        type K = MultiPoly<KappaScalar>;
        let mk = KappaScalar::kappa().neg();
        let z1 = K::var(2, 1);
        assert_eq!(
            z1.shift_substitute(1, &mk).unwrap(),
            z1.sub(&K::constant(2, KappaScalar::kappa()))
        );
        let z1sq = z1.mul(&z1);
        let k = KappaScalar::kappa();
        let expected = z1sq
            .sub(&z1.scale(&k.mul(&KappaScalar::from(2))))
            .add(&K::constant(2, k.mul(&k)));
        assert_eq!(z1sq.shift_substitute(1, &mk).unwrap(), expected);
        let z2 = K::var(2, 2);
        assert_eq!(z2.shift_substitute(1, &mk).unwrap(), z2);
        let cube = K::monomial(&[3, 0], KappaScalar::from(1));
        let shifted = cube.shift_substitute(1, &KappaScalar::from(1)).unwrap();
        assert_eq!(shifted.coeff(&[1, 0]), Some(&KappaScalar::from(3)));
        assert_eq!(shifted.coeff(&[2, 0]), Some(&KappaScalar::from(3)));
        assert_eq!(shifted.coeff(&[0, 0]), Some(&KappaScalar::from(1)));
    }

    #[test]
    fn eval_examples() {
        type K = MultiPoly<KappaScalar>;
        let k1 = KappaScalar::linear(1, 1);
        let z2 = K::var(2, 2);
        let point = [KappaScalar::from(1), KappaScalar::from(0)];
        assert!(z2.eval(&point).unwrap().is_zero());
        // z1 - 1 + z2/(κ+1) at (0, κ+1)
        let e10 = K::var(2, 1)
            .sub(&K::one(2))
            .add(&z2.scale(&k1.inv().unwrap()));
        assert!(e10.eval(&[KappaScalar::from(0), k1.clone()]).unwrap().is_zero());
        assert!(K::one(2).eval(&[k1.clone(), k1]).unwrap().is_one());
        assert!(matches!(z2.eval(&point[..1]), Err(Error::ArityMismatch { .. })));
    }
}
