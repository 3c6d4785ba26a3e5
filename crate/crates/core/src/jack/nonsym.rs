//! ξ_λ as the monic joint eigenfunction of the Dunkl–Cherednik operators.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::combinat::{compositions_of_weight, spectral_vector, Composition};
use crate::daha::DahaOps;
use crate::error::{Error, Result};
use crate::exactalg::{global_cmp, KPoly, KappaScalar, Monomial, Scalar};

/// Sparse columns of `φ(u_i)` on the basis: `cols[b]` lists `(row, entry)`.
type Columns = Vec<Vec<(usize, KappaScalar)>>;

fn columns(ops: &DahaOps<KappaScalar>, i: usize, basis: &[Composition], index: &HashMap<Monomial, usize>) -> Result<Columns> {
    basis
        .iter()
        .enumerate()
        .map(|(b, nu)| {
            let img = ops.cherednik_u(i, &KPoly::monomial(nu.parts(), KappaScalar::one()))?;
            img.terms()
                .map(|(m, c)| match index.get(m) {
                    Some(&row) if row <= b => Ok((row, c.clone())),
                    _ => Err(Error::GenericityFailure(format!(
                        "u{i} maps x^{nu} outside the lower span (term {m:?})"
                    ))),
                })
                .collect()
        })
        .collect()
}

type Rows = Vec<Vec<(usize, KappaScalar)>>;

fn transpose(cols: Columns) -> Rows {
    let mut r = vec![Vec::new(); cols.len()];
    for (b, col) in cols.into_iter().enumerate() {
        for (row, c) in col {
            r[row].push((b, c));
        }
    }
    r
}

/// Computes ξ_λ over ℚ(κ) by back-substitution in the triangular systems of
/// `φ(u_1), …, φ(u_n)` on `{x^ν : |ν| = |λ|, ν ≤ λ}`, then checks every
/// eigen-equation.
pub fn compute_nonsym(lambda: &Composition) -> Result<KPoly> {
    let n = lambda.len();
    let ops = DahaOps::generic();
    let basis: Vec<Composition> = compositions_of_weight(n, lambda.weight())
        .into_iter()
        .filter(|nu| global_cmp(nu.parts(), lambda.parts()) != Ordering::Greater)
        .collect();
    let top = basis.len() - 1;
    debug_assert_eq!(&basis[top], lambda);
    let index: HashMap<Monomial, usize> = basis
        .iter()
        .enumerate()
        .map(|(k, nu)| (Monomial::from_exps(nu.parts()), k))
        .collect();
    let spec = spectral_vector(lambda);

    // Rows of each operator restricted to the basis, built on demand.
    let mut rows: Vec<Option<Rows>> = vec![None; n];
    let mut coef: Vec<KappaScalar> = vec![KappaScalar::zero(); basis.len()];
    coef[top] = KappaScalar::one();
    for row in (0..top).rev() {
        let mut solved = false;
        for i in 1..=n {
            if rows[i - 1].is_none() {
                rows[i - 1] = Some(transpose(columns(&ops, i, &basis, &index)?));
            }
            let r = rows[i - 1].as_ref().unwrap();
            let diag = r[row]
                .iter()
                .find(|(b, _)| *b == row)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(KappaScalar::zero);
            let pivot = diag.sub(spec.get(i));
            if pivot.is_zero() {
                continue;
            }
            let mut acc = KappaScalar::zero();
            for (b, c) in &r[row] {
                if *b > row && !coef[*b].is_zero() {
                    acc = acc.add(&c.mul(&coef[*b]));
                }
            }
            coef[row] = acc.neg().div(&pivot).expect("nonzero pivot");
            solved = true;
            break;
        }
        if !solved {
            return Err(Error::GenericityFailure(format!(
                "no operator separates x^{} from x^{lambda}",
                basis[row]
            )));
        }
    }

    let xi = KPoly::from_terms(
        n,
        basis
            .iter()
            .zip(coef)
            .map(|(nu, c)| (Monomial::from_exps(nu.parts()), c)),
    );
    for i in 1..=n {
        if ops.cherednik_u(i, &xi)? != xi.scale(spec.get(i)) {
            return Err(Error::GenericityFailure(format!("u{i} eigen-equation fails for {lambda}")));
        }
    }
    Ok(xi)
}
